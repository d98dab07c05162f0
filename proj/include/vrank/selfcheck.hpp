#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vrank/rooted_trees.hpp"
#include "vrank/validators.hpp"

namespace vrank {

struct SelfCheckOptions {
  int tree_max_n = 6;
  Color k = 4;
  int fuzz_cases = 2000;
  std::uint64_t seed = 1;
};

struct SelfCheckRow {
  enum class Status { Pass, Fail, Note };

  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

/// p_i truth values of one rooted tree for i = 1..k-1, plus its us-number.
struct TreePredicateRow {
  RootedTree tree;
  Color us_number = 0;
  std::vector<bool> p;  // p[i] for i in [1, k-1]; p[0] unused
};

/// Evaluates p_i for every rooted tree with at most `max_n` vertices.
std::vector<TreePredicateRow> tree_predicate_table(int max_n, Color k);

/// Runs the tree-predicate, min_f and hierarchy checks. A Note row records a
/// measured value that differs from a value stated elsewhere; it is not a
/// failure.
std::vector<SelfCheckRow> run_selfcheck(const SelfCheckOptions& options);

void print_selfcheck(std::ostream& out, const std::vector<SelfCheckRow>& rows);

bool selfcheck_passed(const std::vector<SelfCheckRow>& rows);

}  // namespace vrank
