#pragma once

#include <array>
#include <span>
#include <vector>

#include "vrank/generators.hpp"
#include "vrank/graph.hpp"
#include "vrank/validators.hpp"

namespace vrank {

/// Smallest-available-color greedy coloring of `g`, scanning `order`.
std::vector<Color> greedy_coloring(const Graph& g, std::span<const Vertex> order);

struct SharedNeighborColoring {
  std::vector<Color> colors;  // aligned with the B passed in
  Color palette = 0;          // conflict-graph degeneracy + 1
};

/// Colors B so that two B-vertices with a common neighbor in A differ.
///
/// Only A-B edges are consulted. The conflict graph on B turns each A-vertex
/// neighborhood into a clique and is colored greedily along its degeneracy
/// ordering, which never needs more than `palette` colors.
SharedNeighborColoring shared_neighbor_coloring(const Graph& g, std::span<const Vertex> a,
                                                std::span<const Vertex> b);

/// Independent layers V_1..V_t with ascending, disjoint color ranges.
struct LayerPartition {
  struct Palette {
    Color first = 1;
    Color last = 0;  // last < first only for an empty range
  };

  std::vector<std::vector<Vertex>> layers;
  std::vector<Palette> palettes;
  // Residual-degree cap each layer was extracted under; every member has at
  // most this many neighbors in later layers.
  std::vector<int> forward_bound;
  int degeneracy = 0;  // measured on the input graph
};

struct LayeredColoring {
  Coloring coloring;
  LayerPartition partition;
};

/// us-coloring by layer peeling.
///
/// With d the degeneracy of the input, each round keeps the residual vertices
/// of residual degree at most 4d, colors them greedily with d+1 colors and
/// removes the largest color class as the next layer. Layers are then colored
/// in order with shared_neighbor_coloring against all earlier layers, each on
/// a fresh palette above the previous ones. Valid on every input; the layer
/// count is at most log_q(n) + 1 with q = 1 / (1 - 1/(2(d+1))).
LayeredColoring layered_us_coloring(const Graph& g);

struct ThreePathSeparator {
  std::array<Vertex, 3> apex{};        // u0 <= u1 <= u2
  std::vector<Vertex> vertices;        // union of the three root paths, ascending
};

/// First triple u0 <= u1 <= u2 in lexicographic order whose BFS-tree root
/// paths together leave no component with more than n/2 vertices.
/// Throws Disconnected, or NoSeparatorFound when no triple works (only
/// possible for non-planar input).
ThreePathSeparator three_path_separator(const Graph& g, const BfsTree& tree);

/// One recursion node of separator_lvr_coloring, in input-graph labels.
struct SeparatorNode {
  std::vector<Vertex> vertices;
  std::array<Vertex, 3> apex{};
  std::array<std::vector<Vertex>, 3> paths;  // root path to each apex
  Color offset = 0;                          // separator colors lie above this
  std::vector<SeparatorNode> children;

  int depth() const;
};

struct SeparatorColoring {
  Coloring coloring;
  std::vector<SeparatorNode> roots;  // one per connected component
  int depth = 0;                     // levels in the deepest recursion chain
};

/// l-vertex ranking by recursive three-path separators.
///
/// Each component is split by a three-path separator of its BFS tree from its
/// smallest vertex; the pieces are colored recursively on a shared range
/// [1, d], then a vertex of path j at depth m gets d + 1 + (m mod (l+1)) +
/// (l+1) j, keeping the largest value when it lies on several paths. A single
/// vertex gets color 1.
SeparatorColoring separator_lvr_coloring(const Graph& g, int l);

/// us-coloring for degenerate graphs: vertices of degree below ceil(sqrt n)
/// are colored greedily in the square of their induced subgraph (scanned in
/// degeneracy order); every other vertex gets its own color above those, in
/// ascending vertex order.
Coloring degenerate_us_coloring(const Graph& g);

struct KaryLevelColoring {
  KaryTree tree;
  Coloring coloring;
};

/// T_k with every level-i vertex colored k - i.
KaryLevelColoring kary_level_coloring(int k);

/// Vertex ranking of a tree by centroid decomposition: a centroid found at
/// recursion level j gets color (levels - j). Throws NotATree.
Coloring centroid_vr_coloring(const Graph& tree);

}  // namespace vrank
