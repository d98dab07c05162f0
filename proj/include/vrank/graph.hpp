#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vrank {

// Vertices are dense indices 0..n-1. Every tie in the library is broken
// toward the smaller index.
using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph stored as compressed adjacency lists.
///
/// Neighbor sequences are sorted ascending and the edge list is sorted
/// lexicographically with `u < v` in every entry.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const noexcept;

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(Vertex n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// Vertex permutation in which every vertex has at most `d` neighbors
/// earlier in the sequence; `d` is the graph's degeneracy.
struct DegeneracyOrdering {
  std::vector<Vertex> order;
  int d = 0;
};

/// Peels a minimum-degree vertex at a time (smallest index on ties) and
/// returns the reversed peeling sequence. `d` is the largest degree seen at
/// removal time, which is the degeneracy.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Edges join vertices at distance one or two in `g`.
Graph square(const Graph& g);

struct BfsTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<int> depth;

  /// Vertices of the tree path from the root down to `v`, root first.
  std::vector<Vertex> root_path(Vertex v) const;
};

/// BFS from `root` scanning neighbors in ascending order. Throws
/// Disconnected if some vertex is unreachable.
BfsTree bfs_tree(const Graph& g, Vertex root);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local vertex -> vertex of the source graph
};

/// Subgraph induced by `vertices`, relabeled densely in ascending order of
/// the original indices. Duplicates in `vertices` are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_connected(const Graph& g);

}  // namespace vrank
