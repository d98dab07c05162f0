#include "vrank/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "vrank/errors.hpp"
#include "vrank/rng.hpp"

namespace vrank {

KaryTree complete_kary_tree(int k, std::int64_t max_vertices) {
  if (k < 1) throw std::invalid_argument("k-ary tree needs k >= 1");
  // Level sizes k^0 .. k^(k-1); their sum is (k^k - 1) / (k - 1) for k > 1.
  std::int64_t n = 0;
  std::int64_t width = 1;
  for (int lv = 0; lv < k; ++lv) {
    n += width;
    if (n > max_vertices) {
      throw SizeOverflow("complete " + std::to_string(k) + "-ary tree exceeds " +
                         std::to_string(max_vertices) + " vertices");
    }
    width *= k;
  }
  KaryTree t;
  t.level.assign(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t child = 1; child < n; ++child) {
    const auto parent = static_cast<Vertex>((child - 1) / k);
    edges.push_back({parent, static_cast<Vertex>(child)});
    t.level[static_cast<std::size_t>(child)] = t.level[static_cast<std::size_t>(parent)] + 1;
  }
  t.graph = Graph::from_edges(static_cast<Vertex>(n), edges);
  t.root = 0;
  return t;
}

Graph subdivided_replicated_clique(int k, std::int64_t max_vertices) {
  if (k < 2) throw std::invalid_argument("subdivided replicated clique needs k >= 2");
  const std::int64_t pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
  const std::int64_t n = k + k * pairs;
  if (n > max_vertices) {
    throw SizeOverflow("subdivided replicated clique of order " + std::to_string(k) +
                       " exceeds " + std::to_string(max_vertices) + " vertices");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * k * pairs));
  Vertex next = k;
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      for (int copy = 0; copy < k; ++copy) {
        edges.push_back({a, next});
        edges.push_back({next, b});
        ++next;
      }
    }
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph path_graph(Vertex n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph grid_graph(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
  std::vector<Edge> edges;
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph apollonian(Vertex n_target, std::uint64_t seed) {
  if (n_target < 3) throw std::invalid_argument("apollonian network needs n >= 3");
  Rng rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
  for (Vertex v = 3; v < n_target; ++v) {
    const auto pick = static_cast<std::size_t>(uniform_below(rng, faces.size()));
    const auto [a, b, c] = faces[pick];
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return Graph::from_edges(n_target, edges);
}

Graph random_gnp(Vertex n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace vrank
