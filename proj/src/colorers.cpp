#include "vrank/colorers.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "vrank/errors.hpp"

namespace vrank {

std::vector<Color> greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<Color> color(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> used_by(static_cast<std::size_t>(g.num_vertices()) + 2, -1);
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v)) {
      if (color[w] > 0) used_by[color[w]] = v;
    }
    Color c = 1;
    while (used_by[c] == v) ++c;
    color[v] = c;
  }
  return color;
}

SharedNeighborColoring shared_neighbor_coloring(const Graph& g, std::span<const Vertex> a,
                                                std::span<const Vertex> b) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < b.size(); ++i) local[b[i]] = static_cast<Vertex>(i);
  std::vector<Edge> conflicts;
  std::vector<Vertex> hood;
  for (Vertex x : a) {
    if (local[x] >= 0) {
      throw SetsOverlap("vertex " + std::to_string(x) + " is in both sets");
    }
    hood.clear();
    for (Vertex y : g.neighbors(x)) {
      if (local[y] >= 0) hood.push_back(local[y]);
    }
    for (std::size_t i = 0; i < hood.size(); ++i) {
      for (std::size_t j = i + 1; j < hood.size(); ++j) conflicts.push_back({hood[i], hood[j]});
    }
  }
  const Graph conflict = Graph::from_edges(static_cast<Vertex>(b.size()), conflicts);
  const DegeneracyOrdering ord = degeneracy_ordering(conflict);
  SharedNeighborColoring out;
  out.colors = greedy_coloring(conflict, ord.order);
  out.palette = b.empty() ? 0 : ord.d + 1;
  return out;
}

LayeredColoring layered_us_coloring(const Graph& g) {
  const Vertex n = g.num_vertices();
  LayeredColoring out;
  LayerPartition& part = out.partition;
  part.degeneracy = degeneracy_ordering(g).d;
  const int cap = 4 * part.degeneracy;

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> residual(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) residual[v] = g.degree(v);
  Vertex remaining = n;
  std::vector<Vertex> low;
  while (remaining > 0) {
    low.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && residual[v] <= cap) low.push_back(v);
    }
    // At least half the residual vertices qualify since the residual graph
    // has at most d * remaining edges.
    const InducedSubgraph sub = induced_subgraph(g, low);
    const auto colors = greedy_coloring(sub.graph, degeneracy_ordering(sub.graph).order);
    std::vector<Vertex> count(static_cast<std::size_t>(sub.graph.num_vertices()) + 2, 0);
    for (Color c : colors) ++count[c];
    const auto best = static_cast<Color>(std::max_element(count.begin(), count.end()) - count.begin());
    auto& layer = part.layers.emplace_back();
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] == best) layer.push_back(sub.to_parent[i]);
    }
    for (Vertex v : layer) {
      alive[v] = 0;
      for (Vertex w : g.neighbors(v)) --residual[w];
    }
    part.forward_bound.push_back(cap);
    remaining -= static_cast<Vertex>(layer.size());
  }

  out.coloring.colors.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> earlier;
  Color top = 0;
  for (const auto& layer : part.layers) {
    const SharedNeighborColoring sc = shared_neighbor_coloring(g, earlier, layer);
    for (std::size_t i = 0; i < layer.size(); ++i) out.coloring[layer[i]] = top + sc.colors[i];
    part.palettes.push_back({top + 1, top + sc.palette});
    top += sc.palette;
    earlier.insert(earlier.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

// Scratch state for repeated separator checks on one graph.
class SeparatorProbe {
 public:
  SeparatorProbe(const Graph& g, const BfsTree& tree)
      : g_(g),
        tree_(tree),
        in_sep_(static_cast<std::size_t>(g.num_vertices()), 0),
        seen_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  // Marks the union of the root paths of the given apexes.
  void mark(std::span<const Vertex> apexes) {
    ++stamp_;
    for (Vertex u : apexes) {
      for (Vertex v = u;; v = tree_.parent[v]) {
        if (in_sep_[v] == stamp_) break;  // the rest of the path is marked
        in_sep_[v] = stamp_;
        if (v == tree_.root) break;
      }
    }
  }

  // Whether every component outside the marked set has at most n/2 vertices.
  bool balanced() {
    const Vertex n = g_.num_vertices();
    ++seen_stamp_;
    for (Vertex s = 0; s < n; ++s) {
      if (in_sep_[s] == stamp_ || seen_[s] == seen_stamp_) continue;
      seen_[s] = seen_stamp_;
      stack_.assign(1, s);
      std::int64_t size = 0;
      while (!stack_.empty()) {
        const Vertex v = stack_.back();
        stack_.pop_back();
        if (2 * ++size > n) return false;
        for (Vertex w : g_.neighbors(v)) {
          if (in_sep_[w] == stamp_ || seen_[w] == seen_stamp_) continue;
          seen_[w] = seen_stamp_;
          stack_.push_back(w);
        }
      }
    }
    return true;
  }

  bool marked(Vertex v) const { return in_sep_[v] == stamp_; }

 private:
  const Graph& g_;
  const BfsTree& tree_;
  std::vector<std::uint32_t> in_sep_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::uint32_t seen_stamp_ = 0;
  std::vector<Vertex> stack_;
};

}  // namespace

ThreePathSeparator three_path_separator(const Graph& g, const BfsTree& tree) {
  const Vertex n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("separator of an empty graph");
  if (!is_connected(g)) throw Disconnected("three-path separator needs a connected graph");
  SeparatorProbe probe(g, tree);
  for (Vertex u0 = 0; u0 < n; ++u0) {
    for (Vertex u1 = u0; u1 < n; ++u1) {
      for (Vertex u2 = u1; u2 < n; ++u2) {
        const std::array<Vertex, 3> apex{u0, u1, u2};
        probe.mark(apex);
        if (!probe.balanced()) continue;
        ThreePathSeparator sep;
        sep.apex = apex;
        for (Vertex v = 0; v < n; ++v) {
          if (probe.marked(v)) sep.vertices.push_back(v);
        }
        return sep;
      }
    }
  }
  throw NoSeparatorFound("no three root paths halve this graph (" + std::to_string(n) +
                         " vertices); input is not planar");
}

int SeparatorNode::depth() const {
  int below = 0;
  for (const auto& child : children) below = std::max(below, child.depth());
  return below + 1;
}

namespace {

// Colors the connected vertex set `members` of g (ascending) and returns
// the node plus the largest color it used.
Color color_piece(const Graph& g, std::vector<Vertex> members, int l, Coloring& out,
                  SeparatorNode& node) {
  node.vertices = std::move(members);
  if (node.vertices.size() == 1) {
    const Vertex v = node.vertices.front();
    node.apex = {v, v, v};
    node.paths = {{{v}, {v}, {v}}};
    out[v] = 1;
    return 1;
  }
  const InducedSubgraph sub = induced_subgraph(g, node.vertices);
  const BfsTree tree = bfs_tree(sub.graph, 0);
  const ThreePathSeparator sep = three_path_separator(sub.graph, tree);

  std::vector<char> in_sep(static_cast<std::size_t>(sub.graph.num_vertices()), 0);
  for (Vertex v : sep.vertices) in_sep[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < sub.graph.num_vertices(); ++v) {
    if (!in_sep[v]) rest.push_back(v);
  }
  const InducedSubgraph outside = induced_subgraph(sub.graph, rest);

  Color offset = 0;
  for (const auto& part : components(outside.graph)) {
    std::vector<Vertex> piece;
    piece.reserve(part.size());
    for (Vertex v : part) piece.push_back(sub.to_parent[outside.to_parent[v]]);
    offset = std::max(offset, color_piece(g, std::move(piece), l, out,
                                          node.children.emplace_back()));
  }
  node.offset = offset;

  Color top = 0;
  for (Vertex v : sep.vertices) out[sub.to_parent[v]] = 0;
  for (int j = 0; j < 3; ++j) {
    node.apex[j] = sub.to_parent[sep.apex[j]];
    for (Vertex v : tree.root_path(sep.apex[j])) {
      const Color offered = offset + 1 + tree.depth[v] % (l + 1) + (l + 1) * j;
      Color& slot = out[sub.to_parent[v]];
      slot = std::max(slot, offered);
      top = std::max(top, slot);
      node.paths[j].push_back(sub.to_parent[v]);
    }
  }
  return top;
}

}  // namespace

SeparatorColoring separator_lvr_coloring(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("path length bound must be at least 1");
  SeparatorColoring out;
  out.coloring.colors.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (auto& part : components(g)) {
    auto& node = out.roots.emplace_back();
    color_piece(g, std::move(part), l, out.coloring, node);
    out.depth = std::max(out.depth, node.depth());
  }
  return out;
}

Coloring degenerate_us_coloring(const Graph& g) {
  const Vertex n = g.num_vertices();
  int root = 0;
  while (static_cast<std::int64_t>(root) * root < n) ++root;  // ceil(sqrt(n))

  std::vector<Vertex> low;
  std::vector<Vertex> high;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) < root ? low : high).push_back(v);

  Coloring out(std::vector<Color>(static_cast<std::size_t>(n), 0));
  const InducedSubgraph sub = induced_subgraph(g, low);
  const auto order = degeneracy_ordering(sub.graph).order;
  const auto colors = greedy_coloring(square(sub.graph), order);
  Color top = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    out[sub.to_parent[i]] = colors[i];
    top = std::max(top, colors[i]);
  }
  for (Vertex v : high) out[v] = ++top;
  return out;
}

KaryLevelColoring kary_level_coloring(int k) {
  KaryLevelColoring out;
  out.tree = complete_kary_tree(k);
  out.coloring.colors.resize(out.tree.level.size());
  for (std::size_t v = 0; v < out.tree.level.size(); ++v) {
    out.coloring.colors[v] = k - out.tree.level[v];
  }
  return out;
}

Coloring centroid_vr_coloring(const Graph& tree) {
  const Vertex n = tree.num_vertices();
  if (n == 0 || tree.num_edges() != static_cast<std::size_t>(n - 1) || !is_connected(tree)) {
    throw NotATree("centroid ranking needs a tree");
  }
  std::vector<int> level(static_cast<std::size_t>(n), -1);  // -1 until removed
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> subtree(static_cast<std::size_t>(n));
  std::vector<Vertex> order;

  struct Piece {
    Vertex start;
    int depth;
  };
  std::vector<Piece> work{{0, 0}};
  int deepest = 0;
  while (!work.empty()) {
    const Piece piece = work.back();
    work.pop_back();
    // Preorder of the piece containing `start`, among unremoved vertices.
    order.assign(1, piece.start);
    parent[piece.start] = piece.start;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex v = order[i];
      for (Vertex w : tree.neighbors(v)) {
        if (level[w] >= 0 || w == parent[v]) continue;
        parent[w] = v;
        order.push_back(w);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      subtree[*it] = 1;
      for (Vertex w : tree.neighbors(*it)) {
        if (level[w] < 0 && w != parent[*it]) subtree[*it] += subtree[w];
      }
    }
    const auto size = static_cast<Vertex>(order.size());
    Vertex centroid = -1;
    for (Vertex v : order) {
      Vertex heaviest = size - subtree[v];
      for (Vertex w : tree.neighbors(v)) {
        if (level[w] < 0 && w != parent[v]) heaviest = std::max(heaviest, subtree[w]);
      }
      if (2 * heaviest <= size && (centroid < 0 || v < centroid)) centroid = v;
    }
    level[centroid] = piece.depth;
    deepest = std::max(deepest, piece.depth);
    for (Vertex w : tree.neighbors(centroid)) {
      if (level[w] < 0) work.push_back({w, piece.depth + 1});
    }
  }
  Coloring out(std::vector<Color>(static_cast<std::size_t>(n), 0));
  for (Vertex v = 0; v < n; ++v) out[v] = deepest + 1 - level[v];
  return out;
}

}  // namespace vrank
