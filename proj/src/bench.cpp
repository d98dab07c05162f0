#include "vrank/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "vrank/colorers.hpp"
#include "vrank/exact.hpp"
#include "vrank/generators.hpp"

namespace vrank {

BenchSuite parse_bench_suite(const std::string& name) {
  if (name == "planar-us") return BenchSuite::PlanarUs;
  if (name == "planar-lvr") return BenchSuite::PlanarLvr;
  if (name == "degen-us") return BenchSuite::DegenUs;
  if (name == "tree-exact") return BenchSuite::TreeExact;
  throw std::invalid_argument("unknown bench suite '" + name + "'");
}

std::string bench_suite_name(BenchSuite suite) {
  switch (suite) {
    case BenchSuite::PlanarUs:
      return "planar-us";
    case BenchSuite::PlanarLvr:
      return "planar-lvr";
    case BenchSuite::DegenUs:
      return "degen-us";
    case BenchSuite::TreeExact:
      return "tree-exact";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchRecord run_one(const BenchOptions& opt, std::int64_t size) {
  BenchRecord rec;
  const auto as_vertex = [&] {
    if (size < 1 || size > kMaxGeneratedVertices) {
      throw std::invalid_argument("bench size " + std::to_string(size) + " out of range");
    }
    return static_cast<Vertex>(size);
  };
  Graph g;
  Coloring c;
  switch (opt.suite) {
    case BenchSuite::PlanarUs: {
      g = apollonian(as_vertex(), opt.seed);
      rec.instance = "apollonian-n" + std::to_string(size) + "-s" + std::to_string(opt.seed);
      rec.algorithm = "layered-us";
      const auto start = Clock::now();
      auto result = layered_us_coloring(g);
      rec.runtime_ms = elapsed_ms(start);
      rec.depth = static_cast<int>(result.partition.layers.size());
      c = std::move(result.coloring);
      rec.valid = !is_us(g, c);
      break;
    }
    case BenchSuite::PlanarLvr: {
      g = apollonian(as_vertex(), opt.seed);
      rec.instance = "apollonian-n" + std::to_string(size) + "-s" + std::to_string(opt.seed);
      rec.algorithm = "sep-lvr";
      rec.l = opt.l;
      const auto start = Clock::now();
      auto result = separator_lvr_coloring(g, opt.l);
      rec.runtime_ms = elapsed_ms(start);
      rec.depth = result.depth;
      c = std::move(result.coloring);
      rec.valid = !is_l_vr(g, c, opt.l);
      break;
    }
    case BenchSuite::DegenUs: {
      g = subdivided_replicated_clique(static_cast<int>(size));
      rec.instance = "subclique-k" + std::to_string(size);
      rec.algorithm = "degen-us";
      const auto start = Clock::now();
      c = degenerate_us_coloring(g);
      rec.runtime_ms = elapsed_ms(start);
      rec.valid = !is_us(g, c);
      break;
    }
    case BenchSuite::TreeExact: {
      g = complete_kary_tree(static_cast<int>(size)).graph;
      rec.instance = "kary-k" + std::to_string(size);
      rec.algorithm = "exact-us";
      const auto start = Clock::now();
      auto result = exact_rank_number(g, RankKind::us(), static_cast<Color>(size) + 1);
      rec.runtime_ms = elapsed_ms(start);
      c = std::move(result.witness);
      rec.valid = !is_us(g, c);
      break;
    }
  }
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.colors = c.num_colors();
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
  if (!std::is_sorted(opt.sizes.begin(), opt.sizes.end())) {
    throw std::invalid_argument("bench sizes must be ascending");
  }
  std::vector<BenchRecord> records(opt.sizes.size());
  std::vector<std::exception_ptr> errors(opt.sizes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opt.sizes.size(); i = next++) {
      try {
        records[i] = run_one(opt, opt.sizes[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count =
      std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(opt.sizes.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_ms);
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.l << ','
        << r.colors << ',' << r.depth << ',' << (r.valid ? "true" : "false") << ',' << runtime
        << '\n';
  }
}

}  // namespace vrank
