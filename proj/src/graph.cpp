#include "vrank/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "vrank/errors.hpp"

namespace vrank {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw EndpointOutOfRange("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw EndpointOutOfRange("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") outside 0.." +
                               std::to_string(n - 1));
    }
    if (e.u == e.v) throw SelfLoop("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v): every list receives its smaller neighbors
  // first (ascending u), then its larger ones (ascending v).
  for (const Edge& e : g.edges_) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  return g;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const Vertex n = g.num_vertices();
  DegeneracyOrdering result;
  result.order.reserve(static_cast<std::size_t>(n));
  if (n == 0) return result;

  // Bucket queue keyed by residual degree; each bucket keeps its members
  // ordered so the smallest index is taken first.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::set<Vertex>> buckets(static_cast<std::size_t>(g.max_degree()) + 1);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    buckets[deg[v]].insert(v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::size_t low = 0;
  for (Vertex step = 0; step < n; ++step) {
    while (buckets[low].empty()) ++low;
    const Vertex v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[v] = 1;
    result.d = std::max(result.d, deg[v]);
    result.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[deg[w]].erase(w);
      --deg[w];
      buckets[deg[w]].insert(w);
      if (static_cast<std::size_t>(deg[w]) < low) low = static_cast<std::size_t>(deg[w]);
    }
  }
  std::reverse(result.order.begin(), result.order.end());
  return result;
}

Graph square(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<Vertex> mark(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    mark[v] = v;
    for (Vertex w : g.neighbors(v)) {
      if (mark[w] != v) {
        mark[w] = v;
        if (v < w) edges.push_back({v, w});
      }
      for (Vertex x : g.neighbors(w)) {
        if (mark[x] != v) {
          mark[x] = v;
          if (v < x) edges.push_back({v, x});
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Vertex> BfsTree::root_path(Vertex v) const {
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(depth[v]) + 1);
  for (;;) {
    path.push_back(v);
    if (v == root) break;
    v = parent[v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

BfsTree bfs_tree(const Graph& g, Vertex root) {
  const Vertex n = g.num_vertices();
  if (root < 0 || root >= n) throw EndpointOutOfRange("BFS root out of range");
  BfsTree tree;
  tree.root = root;
  tree.parent.assign(static_cast<std::size_t>(n), -1);
  tree.depth.assign(static_cast<std::size_t>(n), -1);
  tree.parent[root] = root;
  tree.depth[root] = 0;
  std::deque<Vertex> queue{root};
  Vertex reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (tree.depth[w] >= 0) continue;
      tree.depth[w] = tree.depth[v] + 1;
      tree.parent[w] = v;
      ++reached;
      queue.push_back(w);
    }
  }
  if (reached != n) {
    throw Disconnected("BFS from " + std::to_string(root) + " reached " +
                       std::to_string(reached) + " of " + std::to_string(n) +
                       " vertices");
  }
  return tree;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto& part = parts.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
  }
  return parts;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                      sub.to_parent.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const Vertex v = sub.to_parent[i];
    if (v < 0 || v >= g.num_vertices()) {
      throw EndpointOutOfRange("vertex " + std::to_string(v) + " not in graph");
    }
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : sub.to_parent) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && local[w] >= 0) edges.push_back({local[v], local[w]});
    }
  }
  sub.graph = Graph::from_edges(static_cast<Vertex>(sub.to_parent.size()), edges);
  return sub;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || components(g).size() == 1;
}

}  // namespace vrank
