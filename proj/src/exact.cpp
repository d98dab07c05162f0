#include "vrank/exact.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

#include "vrank/errors.hpp"

namespace vrank {

std::string RankKind::name() const {
  switch (type) {
    case Type::Us:
      return "us";
    case Type::Lvr:
      return "lvr(" + std::to_string(l) + ")";
    case Type::Vr:
      return "vr";
  }
  return "?";
}

std::optional<Violation> check_ranking(const Graph& g, const Coloring& c, RankKind kind) {
  switch (kind.type) {
    case RankKind::Type::Us:
      return is_us(g, c);
    case RankKind::Type::Lvr:
      return is_l_vr(g, c, kind.l);
    case RankKind::Type::Vr:
      return is_vr(g, c);
  }
  return std::nullopt;
}

namespace {

int path_bound(RankKind kind) {
  switch (kind.type) {
    case RankKind::Type::Us:
      return 2;
    case RankKind::Type::Lvr:
      if (kind.l < 1) throw std::invalid_argument("path length bound must be at least 1");
      return kind.l;
    case RankKind::Type::Vr:
      return INT_MAX;
  }
  return INT_MAX;
}

// Backtracking over colorings with colors in [1, k]. A partial assignment is
// kept only while it has no violating path among assigned vertices, so each
// new vertex only needs the paths through itself checked.
class RankSearch {
 public:
  RankSearch(const Graph& g, int bound, Color k, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g),
        bound_(bound),
        k_(k),
        budget_(budget),
        nodes_(nodes),
        order_(degeneracy_ordering(g).order),
        color_(static_cast<std::size_t>(g.num_vertices()), 0),
        dist_(static_cast<std::size_t>(g.num_vertices()), -1) {}

  std::optional<Coloring> run() {
    if (!assign(0)) return std::nullopt;
    return Coloring(color_);
  }

 private:
  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    for (Color c = 1; c <= k_; ++c) {
      if (++nodes_ > budget_) {
        throw SearchBudgetExceeded("exact search exceeded " + std::to_string(budget_) +
                                   " nodes");
      }
      color_[v] = c;
      if (consistent(v) && assign(pos + 1)) return true;
    }
    color_[v] = 0;
    return false;
  }

  // A violation through v exists iff, for some t >= c(v), two distinct
  // t-colored vertices x, z satisfy dist(x, v) + dist(v, z) <= bound inside
  // the assigned vertices colored at most t (for t == c(v), v itself is one
  // of them). A walk of that length contains a simple violating path.
  bool consistent(Vertex v) {
    const Color cv = color_[v];
    for (Color t = cv; t <= k_; ++t) {
      const int depth_limit = t == cv ? bound_ : bound_ - 1;
      if (depth_limit < 1) continue;
      int first = -1;
      bool ok = true;
      touched_.clear();
      queue_.clear();
      dist_[v] = 0;
      touched_.push_back(v);
      queue_.push_back(v);
      while (!queue_.empty() && ok) {
        const Vertex x = queue_.front();
        queue_.pop_front();
        if (dist_[x] >= depth_limit) continue;
        for (Vertex y : g_.neighbors(x)) {
          const Color cy = color_[y];
          if (cy == 0 || cy > t || dist_[y] >= 0) continue;
          dist_[y] = dist_[x] + 1;
          touched_.push_back(y);
          if (cy == t) {
            if (t == cv) {
              ok = false;
              break;
            }
            // BFS pops in distance order, so the first two hits are closest.
            if (first < 0) {
              first = dist_[y];
            } else if (bound_ == INT_MAX || first + dist_[y] <= bound_) {
              ok = false;
              break;
            }
            continue;  // t-colored vertices are endpoints, not interior
          }
          queue_.push_back(y);
        }
      }
      for (Vertex x : touched_) dist_[x] = -1;
      if (!ok) return false;
    }
    return true;
  }

  const Graph& g_;
  int bound_;
  Color k_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<Vertex> order_;
  std::vector<Color> color_;
  std::vector<int> dist_;
  std::vector<Vertex> touched_;
  std::deque<Vertex> queue_;
};

void require_tree(const Graph& t) {
  if (t.num_vertices() == 0 ||
      t.num_edges() != static_cast<std::size_t>(t.num_vertices() - 1) || !is_connected(t)) {
    throw NotATree("graph with " + std::to_string(t.num_vertices()) + " vertices and " +
                   std::to_string(t.num_edges()) + " edges is not a tree");
  }
}

}  // namespace

std::optional<Coloring> find_ranking(const Graph& g, RankKind kind, Color k,
                                     std::uint64_t node_budget) {
  std::uint64_t nodes = 0;
  RankSearch search(g, path_bound(kind), k, node_budget, nodes);
  return search.run();
}

ExactResult exact_rank_number(const Graph& g, RankKind kind, Color max_k,
                              std::uint64_t node_budget) {
  if (max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  const int bound = path_bound(kind);
  ExactResult result;
  if (g.num_vertices() == 0) return result;
  for (Color k = 1; k <= max_k; ++k) {
    RankSearch search(g, bound, k, node_budget, result.nodes);
    if (auto found = search.run()) {
      result.k = k;
      result.witness = std::move(*found);
      return result;
    }
  }
  throw Infeasible("no " + kind.name() + " ranking with at most " + std::to_string(max_k) +
                   " colors");
}

std::vector<std::vector<bool>> root_color_table(const Graph& tree, Vertex root, Color k,
                                                std::uint64_t node_budget) {
  require_tree(tree);
  if (k < 2 || k > 31) throw std::invalid_argument("total colors must lie in [2, 31]");
  const Color palette = k - 1;
  const BfsTree bfs = bfs_tree(tree, root);

  // BFS order: every vertex after its parent, siblings contiguous.
  std::vector<Vertex> order{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : tree.neighbors(order[i])) {
      if (w != root && bfs.parent[w] == order[i]) order.push_back(w);
    }
  }

  // realizable[l] has bit m set once a coloring with root l and no root
  // child colored m has been seen.
  const std::uint32_t all = ((1u << palette) - 1u) << 1;
  std::vector<std::uint32_t> realizable(static_cast<std::size_t>(palette) + 1, 0);
  Coloring c(std::vector<Color>(static_cast<std::size_t>(tree.num_vertices()), 0));
  std::uint64_t nodes = 0;
  bool done = false;

  auto fits = [&](Vertex v) {
    if (v == root) return true;
    const Vertex p = bfs.parent[v];
    if (c[v] == c[p]) return false;
    // v as an end of a two-edge path through its parent.
    if (p != root && c[bfs.parent[p]] == c[v] && c[p] < c[v]) return false;
    for (Vertex s : tree.neighbors(p)) {
      if (s == v || s == bfs.parent[p] || c[s] == 0) continue;
      if (c[s] == c[v] && c[p] < c[v]) return false;
    }
    return true;
  };

  auto record = [&] {
    if (is_us(tree, c)) {
      throw std::logic_error("incremental us check accepted an invalid coloring");
    }
    std::uint32_t child_colors = 0;
    for (Vertex w : tree.neighbors(root)) child_colors |= 1u << c[w];
    realizable[static_cast<std::size_t>(c[root])] |= ~child_colors & all;
    done = std::all_of(realizable.begin() + 1, realizable.end(),
                       [&](std::uint32_t bits) { return bits == all; });
  };

  auto search = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      record();
      return;
    }
    const Vertex v = order[pos];
    for (Color col = 1; col <= palette && !done; ++col) {
      if (++nodes > node_budget) {
        throw SearchBudgetExceeded("root color enumeration exceeded " +
                                   std::to_string(node_budget) + " nodes");
      }
      c[v] = col;
      if (fits(v)) self(self, pos + 1);
    }
    c[v] = 0;
  };
  search(search, 0);

  std::vector<std::vector<bool>> table(static_cast<std::size_t>(palette) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(palette) + 1, false));
  for (Color l = 1; l <= palette; ++l) {
    for (Color m = 1; m <= palette; ++m) {
      table[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] =
          (realizable[static_cast<std::size_t>(l)] >> m) & 1u;
    }
  }
  return table;
}

bool p_predicate(const Graph& tree, Vertex root, Color i, Color k, std::uint64_t node_budget) {
  if (i < 1 || i > k - 1) throw std::invalid_argument("color floor must lie in [1, k-1]");
  const auto table = root_color_table(tree, root, k, node_budget);
  for (Color l = i; l <= k - 1; ++l) {
    for (Color m = i; m <= k - 1; ++m) {
      if (!table[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)]) return false;
    }
  }
  return true;
}

std::optional<MinFWitness> min_f(Color i, Color k, int n_max, std::uint64_t node_budget) {
  if (i < 1 || i > k - 1) throw std::invalid_argument("color floor must lie in [1, k-1]");
  for (int n = 1; n <= n_max; ++n) {
    std::optional<MinFWitness> found;
    for_each_rooted_tree(n, [&](const RootedTree& t) {
      if (p_predicate(t.graph(), t.root(), i, k, node_budget)) return true;
      found = MinFWitness{n, t};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace vrank
