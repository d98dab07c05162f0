#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vrank/graph.hpp"
#include "vrank/validators.hpp"

namespace vrank {

enum class BenchSuite { PlanarUs, PlanarLvr, DegenUs, TreeExact };

BenchSuite parse_bench_suite(const std::string& name);  // throws std::invalid_argument
std::string bench_suite_name(BenchSuite suite);

/// One row of the color-budget experiment. `valid` is always the verdict of
/// the matching validator.
struct BenchRecord {
  std::string instance;
  Vertex n = 0;
  std::size_t m = 0;
  std::string algorithm;
  int l = 0;  // 0 when the algorithm has no path bound
  Color colors = 0;
  int depth = 0;  // layers or recursion levels; 0 when not applicable
  bool valid = false;
  double runtime_ms = 0.0;
};

struct BenchOptions {
  BenchSuite suite = BenchSuite::PlanarUs;
  // Vertex targets for planar suites, the order k for degen-us and tree-exact.
  std::vector<std::int64_t> sizes;
  int l = 2;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Generates, colors and validates one instance per size. Records come back
/// in the order of `sizes` whatever the thread count.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader =
    "instance,n,m,algorithm,l,colors,depth,valid,runtime_ms";

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace vrank
