#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/rooted_trees.hpp"
#include "vrank/validators.hpp"

namespace vrank {

/// Which ranking condition a coloring must satisfy.
struct RankKind {
  enum class Type { Us, Lvr, Vr };

  Type type = Type::Us;
  int l = 2;

  static RankKind us() { return {Type::Us, 2}; }
  static RankKind lvr(int l) { return {Type::Lvr, l}; }
  static RankKind vr() { return {Type::Vr, 0}; }

  std::string name() const;
};

/// Runs the validator matching `kind`.
std::optional<Violation> check_ranking(const Graph& g, const Coloring& c, RankKind kind);

inline constexpr std::uint64_t kDefaultSearchBudget = 4'000'000'000ULL;

struct ExactResult {
  Color k = 0;
  Coloring witness;
  std::uint64_t nodes = 0;  // search nodes over all deepening rounds
};

/// Smallest number of colors admitting a ranking of the given kind.
///
/// Iterative deepening on k. For each k the vertices are assigned in
/// degeneracy order, lowest color first, and a branch is cut as soon as the
/// assigned vertices contain a violation. No color symmetry is broken since
/// ranks are ordered. Throws Infeasible when no ranking exists with at most
/// `max_k` colors and SearchBudgetExceeded when the node budget runs out.
ExactResult exact_rank_number(const Graph& g, RankKind kind, Color max_k,
                              std::uint64_t node_budget = kDefaultSearchBudget);

/// A ranking with colors in [1, k], or nullopt if none exists.
std::optional<Coloring> find_ranking(const Graph& g, RankKind kind, Color k,
                                     std::uint64_t node_budget = kDefaultSearchBudget);

/// For a tree rooted at `root` and a total of `k` colors: entry [l][m] (both
/// 1-based, in [1, k-1]) tells whether some us-coloring with colors in
/// [1, k-1] gives the root color l and no child of the root color m.
///
/// Decided by enumerating colorings and keeping those accepted by is_us.
/// Throws NotATree, or SearchBudgetExceeded after `node_budget` partial
/// assignments.
std::vector<std::vector<bool>> root_color_table(const Graph& tree, Vertex root, Color k,
                                                std::uint64_t node_budget = kDefaultSearchBudget);

/// True iff every pair i <= l, m <= k-1 is realizable in root_color_table.
bool p_predicate(const Graph& tree, Vertex root, Color i, Color k,
                 std::uint64_t node_budget = kDefaultSearchBudget);

struct MinFWitness {
  int n = 0;
  RootedTree tree;  // rooted at vertex 0
};

/// Smallest rooted tree (by vertex count, then enumeration order) on which
/// p_predicate(., ., i, k) is false, searching sizes 1..n_max.
std::optional<MinFWitness> min_f(Color i, Color k, int n_max,
                                 std::uint64_t node_budget = kDefaultSearchBudget);

}  // namespace vrank
