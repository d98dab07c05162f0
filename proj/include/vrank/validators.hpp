#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrank/graph.hpp"

namespace vrank {

using Color = std::int32_t;

/// Total map vertex -> rank. Ranks are positive; the number of colors of a
/// coloring is its largest rank.
struct Coloring {
  std::vector<Color> colors;

  Coloring() = default;
  explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {}

  std::size_t size() const noexcept { return colors.size(); }
  Color operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  Color& operator[](Vertex v) { return colors[static_cast<std::size_t>(v)]; }
  Color num_colors() const noexcept;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Witness that a coloring breaks a ranking condition.
///
/// NotProper carries a single edge. PathViolation carries a simple path whose
/// endpoints share a color and whose interior has no strictly larger color.
struct Violation {
  enum class Kind { NotProper, PathViolation };

  Kind kind = Kind::NotProper;
  std::vector<Vertex> path;

  std::string describe(const Coloring& c) const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr std::uint64_t kDefaultValidationBudget = 100'000'000;

/// Throws ColoringIncomplete unless `c` assigns a positive color to every
/// vertex of `g` and nothing else.
void require_total(const Graph& g, const Coloring& c);

/// First monochromatic edge in lexicographic order, if any.
std::optional<Violation> is_proper(const Graph& g, const Coloring& c);

/// Checks every simple path of length at most `l` by depth-limited DFS from
/// each start vertex in ascending order, neighbors ascending. Returns the
/// first violating path in that order. A branch stops as soon as its interior
/// holds a color above the start color, since no extension can then violate.
///
/// Throws BudgetExceeded once more than `budget` path extensions are made.
std::optional<Violation> is_l_vr(const Graph& g, const Coloring& c, int l,
                                 std::uint64_t budget = kDefaultValidationBudget);

/// Unique-superior check; the l = 2 case of is_l_vr.
inline std::optional<Violation> is_us(const Graph& g, const Coloring& c,
                                      std::uint64_t budget = kDefaultValidationBudget) {
  return is_l_vr(g, c, 2, budget);
}

/// Full vertex-ranking check. Colors are activated in ascending order with a
/// union-find over the subgraph of colors <= t; two color-t vertices in one
/// component are a violation, and the witness is the BFS path joining them
/// inside that subgraph.
std::optional<Violation> is_vr(const Graph& g, const Coloring& c);

}  // namespace vrank
