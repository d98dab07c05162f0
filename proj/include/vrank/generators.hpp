#pragma once

#include <cstdint>
#include <vector>

#include "vrank/graph.hpp"

namespace vrank {

/// Generators throw SizeOverflow rather than build graphs past this size.
inline constexpr std::int64_t kMaxGeneratedVertices = 1 << 24;

struct KaryTree {
  Graph graph;
  Vertex root = 0;
  std::vector<int> level;  // distance from the root
};

/// Complete k-ary tree with k levels (height k-1), numbered in BFS order:
/// the children of vertex v are k*v+1 .. k*v+k.
KaryTree complete_kary_tree(int k, std::int64_t max_vertices = kMaxGeneratedVertices);

/// K_k with every edge replicated k times and each copy subdivided once.
/// Hubs are 0..k-1; subdivision vertices follow, grouped by hub pair in
/// lexicographic order.
Graph subdivided_replicated_clique(int k, std::int64_t max_vertices = kMaxGeneratedVertices);

Graph path_graph(Vertex n);

/// rows x cols grid, row-major numbering.
Graph grid_graph(Vertex rows, Vertex cols);

/// Stacked (Apollonian) triangulation grown from a triangle by repeatedly
/// inserting a vertex into a uniformly chosen inner face. Planar with
/// 3n - 6 edges; identical output for identical (n_target, seed).
Graph apollonian(Vertex n_target, std::uint64_t seed);

/// Erdos-Renyi G(n, p) sample, used by tests and the self-check.
Graph random_gnp(Vertex n, double p, std::uint64_t seed);

}  // namespace vrank
