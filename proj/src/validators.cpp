#include "vrank/validators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "vrank/errors.hpp"
#include "vrank/union_find.hpp"

namespace vrank {

Color Coloring::num_colors() const noexcept {
  Color k = 0;
  for (Color c : colors) k = std::max(k, c);
  return k;
}

std::string Violation::describe(const Coloring& c) const {
  std::ostringstream out;
  out << (kind == Kind::NotProper ? "not-proper edge" : "path");
  for (Vertex v : path) out << ' ' << v + 1;
  out << " colors";
  for (Vertex v : path) out << ' ' << c[v];
  return out.str();
}

void require_total(const Graph& g, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ColoringIncomplete("coloring has " + std::to_string(c.size()) +
                             " entries for " + std::to_string(g.num_vertices()) +
                             " vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c[v] < 1) {
      throw ColoringIncomplete("vertex " + std::to_string(v) + " has color " +
                               std::to_string(c[v]));
    }
  }
}

std::optional<Violation> is_proper(const Graph& g, const Coloring& c) {
  require_total(g, c);
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return Violation{Violation::Kind::NotProper, {e.u, e.v}};
  }
  return std::nullopt;
}

std::optional<Violation> is_l_vr(const Graph& g, const Coloring& c, int l,
                                 std::uint64_t budget) {
  require_total(g, c);
  if (l < 1) throw std::invalid_argument("path length bound must be at least 1");
  const Vertex n = g.num_vertices();

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::uint64_t steps = 0;

  // Invariant: every interior vertex of `path` has a color strictly below
  // the start color. Equal color at the new end is a violation; a larger
  // color can never be followed by one.
  for (Vertex s = 0; s < n; ++s) {
    const Color cs = c[s];
    stack.assign(1, Frame{s, 0});
    path.assign(1, s);
    on_path[s] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nb = g.neighbors(top.v);
      if (top.next == nb.size()) {
        on_path[top.v] = 0;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      const Vertex w = nb[top.next++];
      if (on_path[w]) continue;
      if (++steps > budget) {
        for (Vertex v : path) on_path[v] = 0;
        throw BudgetExceeded("path enumeration exceeded " + std::to_string(budget) +
                             " steps");
      }
      if (c[w] == cs) {
        path.push_back(w);
        const auto kind = path.size() == 2 ? Violation::Kind::NotProper
                                           : Violation::Kind::PathViolation;
        for (Vertex v : path) on_path[v] = 0;
        return Violation{kind, path};
      }
      if (c[w] < cs && static_cast<int>(path.size()) < l) {
        path.push_back(w);
        on_path[w] = 1;
        stack.push_back(Frame{w, 0});
      }
    }
  }
  return std::nullopt;
}

namespace {

// Shortest path from `from` to `to` through vertices colored at most `t`,
// neighbors scanned in ascending order.
std::vector<Vertex> bounded_color_path(const Graph& g, const Coloring& c, Color t,
                                       Vertex from, Vertex to) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.num_vertices()), -1);
  parent[from] = from;
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] >= 0 || c[w] > t) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Violation> is_vr(const Graph& g, const Coloring& c) {
  require_total(g, c);
  const Vertex n = g.num_vertices();
  std::map<Color, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < n; ++v) by_color[c[v]].push_back(v);

  UnionFind uf(static_cast<std::size_t>(n));
  std::map<std::size_t, Vertex> first_in_component;
  for (const auto& [t, members] : by_color) {
    // Vertices of smaller colors are already merged; join the new layer.
    for (Vertex v : members) {
      for (Vertex w : g.neighbors(v)) {
        if (c[w] <= t) uf.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
      }
    }
    first_in_component.clear();
    for (Vertex v : members) {
      auto [it, inserted] = first_in_component.emplace(uf.find(static_cast<std::size_t>(v)), v);
      if (inserted) continue;
      auto path = bounded_color_path(g, c, t, it->second, v);
      const auto kind = path.size() == 2 ? Violation::Kind::NotProper
                                         : Violation::Kind::PathViolation;
      return Violation{kind, std::move(path)};
    }
  }
  return std::nullopt;
}

}  // namespace vrank
