#include "vrank/rooted_trees.hpp"

namespace vrank {

std::vector<Vertex> RootedTree::parents() const {
  std::vector<Vertex> parent(levels.size(), 0);
  // Preorder: the parent is the latest earlier vertex one level up.
  std::vector<Vertex> last_at_level(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int lv = levels[i];
    parent[i] = lv == 0 ? 0 : last_at_level[static_cast<std::size_t>(lv - 1)];
    last_at_level[static_cast<std::size_t>(lv)] = static_cast<Vertex>(i);
  }
  return parent;
}

Graph RootedTree::graph() const {
  const auto parent = parents();
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < parent.size(); ++i) {
    edges.push_back({parent[i], static_cast<Vertex>(i)});
  }
  return Graph::from_edges(size(), edges);
}

void for_each_rooted_tree(int n, const std::function<bool(const RootedTree&)>& visit) {
  if (n <= 0) return;
  RootedTree tree;
  tree.levels.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tree.levels[static_cast<std::size_t>(i)] = i;
  auto& lv = tree.levels;
  for (;;) {
    if (!visit(tree)) return;
    // p: last position deeper than level 1. None left means the star.
    int p = n - 1;
    while (p > 0 && lv[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) return;
    int q = p - 1;
    while (lv[static_cast<std::size_t>(q)] != lv[static_cast<std::size_t>(p)] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i) {
      lv[static_cast<std::size_t>(i)] = lv[static_cast<std::size_t>(i - shift)];
    }
  }
}

std::vector<RootedTree> rooted_trees(int n) {
  std::vector<RootedTree> out;
  for_each_rooted_tree(n, [&](const RootedTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace vrank
