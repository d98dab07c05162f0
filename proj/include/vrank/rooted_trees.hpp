#pragma once

#include <functional>
#include <vector>

#include "vrank/graph.hpp"

namespace vrank {

/// A rooted tree given by its canonical level sequence: vertex i sits at
/// depth levels[i], vertices are in preorder and the root is vertex 0.
struct RootedTree {
  std::vector<int> levels;

  Vertex size() const noexcept { return static_cast<Vertex>(levels.size()); }
  /// parent[0] == 0.
  std::vector<Vertex> parents() const;
  Graph graph() const;
  Vertex root() const noexcept { return 0; }
};

/// Calls `visit` once per isomorphism class of rooted trees on `n` vertices,
/// in the order produced by the Beyer-Hedetniemi successor rule (path first,
/// star last). Stops early when `visit` returns false.
void for_each_rooted_tree(int n, const std::function<bool(const RootedTree&)>& visit);

std::vector<RootedTree> rooted_trees(int n);

}  // namespace vrank
