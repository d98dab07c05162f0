#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the validators or colorers they are used to check.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/rng.hpp"
#include "vrank/validators.hpp"

namespace vrank::testing {

inline Graph make_graph(Vertex n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, e);
}

inline Graph star_graph(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edges(leaves + 1, e);
}

// Graph on n vertices whose edge set is the bit pattern `mask` over the
// pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_mask(Vertex n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

// Labeled tree from a Pruefer sequence.
inline Graph tree_from_pruefer(Vertex n, const std::vector<Vertex>& seq) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> e;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.push_back({leaf, v});
    --degree[leaf];
    --degree[v];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        e.push_back({a, v});
      }
    }
  }
  return Graph::from_edges(n, e);
}

inline Coloring random_coloring(Rng& rng, Vertex n, Color palette) {
  Coloring c(std::vector<Color>(static_cast<std::size_t>(n)));
  for (auto& col : c.colors)
    col = static_cast<Color>(1 + uniform_below(rng, static_cast<std::uint64_t>(palette)));
  return c;
}

// All-pairs hop distances by Floyd-Warshall; INT_MAX / 4 when unreachable.
inline std::vector<std::vector<int>> all_pairs_distance(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const int inf = INT_MAX / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Visits every simple path with at least one edge and at most `max_len`
// edges, each direction separately. No pruning.
inline void for_each_simple_path(const Graph& g, int max_len,
                                 const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path;
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  std::function<void()> extend = [&] {
    if (path.size() > 1) visit(path);
    if (static_cast<int>(path.size()) - 1 == max_len) return;
    for (Vertex w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    on[s] = 1;
    path.assign(1, s);
    extend();
    on[s] = 0;
  }
}

// Ranking condition straight from the definition: every simple path of
// length <= max_len with equal-colored ends has a strictly larger interior
// color.
inline bool brute_ranking_ok(const Graph& g, const Coloring& c, int max_len) {
  bool ok = true;
  for_each_simple_path(g, max_len, [&](const std::vector<Vertex>& p) {
    if (!ok || c[p.front()] != c[p.back()]) return;
    Color interior = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) interior = std::max(interior, c[p[i]]);
    if (interior <= c[p.front()]) ok = false;
  });
  return ok;
}

inline bool brute_vr_ok(const Graph& g, const Coloring& c) {
  return brute_ranking_ok(g, c, std::max<int>(1, g.num_vertices()));
}

// us condition as stated: proper, and the middle of every two-edge path
// with equal ends is strictly larger.
inline bool definition_us_ok(const Graph& g, const Coloring& c) {
  for (const Edge& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c[nb[i]] == c[nb[j]] && c[v] <= c[nb[i]]) return false;
  }
  return true;
}

// Fewest colors of a ranking, by trying every coloring with colors in
// [1, k] for k = 1, 2, ...; `accept` decides validity.
inline Color brute_min_colors(const Graph& g,
                              const std::function<bool(const Graph&, const Coloring&)>& accept) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (n == 0) return 0;
  for (Color k = 1;; ++k) {
    Coloring c(std::vector<Color>(n, 1));
    for (;;) {
      if (accept(g, c)) return k;
      std::size_t i = 0;
      while (i < n && c.colors[i] == k) c.colors[i++] = 1;
      if (i == n) break;
      ++c.colors[i];
    }
  }
}

// Degeneracy from the definition: the largest minimum degree over all
// induced subgraphs. Exponential; n <= 12.
inline int brute_degeneracy(const Graph& g) {
  const Vertex n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_deg = INT_MAX;
    for (Vertex v = 0; v < n; ++v) {
      if (!((mask >> v) & 1u)) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += (mask >> w) & 1u;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

}  // namespace vrank::testing
