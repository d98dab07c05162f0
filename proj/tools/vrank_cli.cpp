// Command-line front end. Exit codes: 0 success or valid coloring, 1 invalid
// coloring or failed check, 2 usage or parse error, 3 algorithm failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "vrank/bench.hpp"
#include "vrank/colorers.hpp"
#include "vrank/errors.hpp"
#include "vrank/exact.hpp"
#include "vrank/generators.hpp"
#include "vrank/io.hpp"
#include "vrank/selfcheck.hpp"
#include "vrank/validators.hpp"

namespace {

using namespace vrank;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAlgorithm = 3;

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  out << text;
}

Graph read_graph_arg(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return read_graph_file(path);
}

RankKind rank_kind(const std::string& name, int l) {
  if (name == "us") return RankKind::us();
  if (name == "lvr") return RankKind::lvr(l);
  if (name == "vr") return RankKind::vr();
  throw UsageError("unknown kind '" + name + "'");
}

struct GenerateArgs {
  std::string family;
  std::optional<int> k;
  std::optional<Vertex> n;
  std::optional<Vertex> rows;
  std::optional<Vertex> cols;
  std::uint64_t seed = 1;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  auto need = [&](const auto& opt, const char* flag) {
    if (!opt) throw UsageError("--family " + a.family + " needs " + flag);
    return *opt;
  };
  Graph g;
  if (a.family == "kary") {
    g = complete_kary_tree(need(a.k, "--k")).graph;
  } else if (a.family == "subclique") {
    g = subdivided_replicated_clique(need(a.k, "--k"));
  } else if (a.family == "path") {
    g = path_graph(need(a.n, "--n"));
  } else if (a.family == "grid") {
    g = grid_graph(need(a.rows, "--rows"), need(a.cols, "--cols"));
  } else {
    g = apollonian(need(a.n, "--n"), a.seed);
  }
  write_text(a.output, graph_to_string(g));
  return kExitValid;
}

struct ColorArgs {
  std::string algo;
  int l = 2;
  std::string input;
  std::string output;
};

// kary-level colors its own T_k; the input must be that tree.
Coloring kary_level_for(const Graph& g) {
  for (int k = 1;; ++k) {
    const KaryLevelColoring kl = kary_level_coloring(k);
    if (kl.tree.graph.num_vertices() == g.num_vertices()) {
      if (!(kl.tree.graph == g)) break;
      return kl.coloring;
    }
    if (kl.tree.graph.num_vertices() > g.num_vertices()) break;
  }
  throw Error("kary-level needs a complete k-ary tree as generated by 'generate --family kary'");
}

int run_color(const ColorArgs& a) {
  const Graph g = read_graph_arg(a.input);
  Coloring c;
  std::optional<Violation> bad;
  if (a.algo == "layered-us") {
    c = layered_us_coloring(g).coloring;
    bad = is_us(g, c);
  } else if (a.algo == "sep-lvr") {
    c = separator_lvr_coloring(g, a.l).coloring;
    bad = is_l_vr(g, c, a.l);
  } else if (a.algo == "degen-us") {
    c = degenerate_us_coloring(g);
    bad = is_us(g, c);
  } else if (a.algo == "kary-level") {
    c = kary_level_for(g);
    bad = is_us(g, c);
  } else {
    c = centroid_vr_coloring(g);
    bad = is_vr(g, c);
  }
  write_text(a.output, coloring_to_string(c));
  // Keep stdout clean for the coloring when it goes there.
  std::ostream& summary = (a.output.empty() || a.output == "-") ? std::cerr : std::cout;
  summary << "colors " << c.num_colors() << " valid " << (bad ? "false" : "true") << '\n';
  if (bad) {
    std::cerr << "violation: " << bad->describe(c) << '\n';
    return kExitInvalid;
  }
  return kExitValid;
}

struct ValidateArgs {
  std::string kind = "us";
  int l = 2;
  std::string input;
  std::string coloring;
};

int run_validate(const ValidateArgs& a) {
  const Graph g = read_graph_arg(a.input);
  const Coloring c = read_coloring_file(a.coloring);
  if (c.size() != static_cast<std::size_t>(g.num_vertices())) {
    std::cout << "invalid: coloring has " << c.size() << " entries for " << g.num_vertices()
              << " vertices\n";
    return kExitInvalid;
  }
  const std::optional<Violation> bad =
      a.kind == "proper" ? is_proper(g, c) : check_ranking(g, c, rank_kind(a.kind, a.l));
  if (bad) {
    std::cout << "invalid: " << bad->describe(c) << '\n';
    return kExitInvalid;
  }
  std::cout << "valid colors " << c.num_colors() << '\n';
  return kExitValid;
}

struct ExactArgs {
  std::string kind = "us";
  int l = 2;
  Color max_k = 0;  // 0: number of vertices
  std::uint64_t budget = kDefaultSearchBudget;
  std::string input;
};

int run_exact(const ExactArgs& a) {
  const Graph g = read_graph_arg(a.input);
  const Color max_k = a.max_k > 0 ? a.max_k : std::max<Color>(1, g.num_vertices());
  try {
    const ExactResult r = exact_rank_number(g, rank_kind(a.kind, a.l), max_k, a.budget);
    std::cout << "k " << r.k << '\n' << coloring_to_string(r.witness);
  } catch (const Infeasible&) {
    std::cout << "INFEASIBLE\n";
  }
  return kExitValid;
}

std::vector<std::int64_t> parse_sizes(const std::string& list) {
  std::vector<std::int64_t> sizes;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string item = list.substr(pos, comma - pos);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("bad size '" + item + "'");
    sizes.push_back(v);
    pos = comma + 1;
  }
  return sizes;
}

struct BenchArgs {
  std::string suite;
  std::string sizes;
  int l = 2;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output;
};

int run_bench_cmd(const BenchArgs& a) {
  BenchOptions opt;
  opt.suite = parse_bench_suite(a.suite);
  opt.sizes = parse_sizes(a.sizes);
  opt.l = a.l;
  opt.seed = a.seed;
  opt.threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
  const auto records = run_bench(opt);
  std::ostringstream csv;
  write_bench_csv(csv, records);
  write_text(a.output, csv.str());
  for (const auto& r : records)
    if (!r.valid) return kExitInvalid;
  return kExitValid;
}

int run_selfcheck_cmd(const SelfCheckOptions& opt) {
  const auto rows = run_selfcheck(opt);
  print_selfcheck(std::cout, rows);
  return selfcheck_passed(rows) ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex rankings, unique-superior colorings and l-vertex rankings"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "write a graph from a generator family");
  gen_cmd->add_option("--family", gen.family, "instance family")
      ->required()
      ->check(CLI::IsMember({"kary", "subclique", "path", "grid", "apollonian"}));
  gen_cmd->add_option("--k", gen.k, "order for kary and subclique");
  gen_cmd->add_option("--n", gen.n, "vertex count for path and apollonian");
  gen_cmd->add_option("--rows", gen.rows, "grid rows");
  gen_cmd->add_option("--cols", gen.cols, "grid columns");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("-o,--output", gen.output, "output graph file (default stdout)");

  ColorArgs col;
  auto* col_cmd = app.add_subcommand("color", "color a graph and self-validate the result");
  col_cmd->add_option("--algo", col.algo, "coloring algorithm")
      ->required()
      ->check(CLI::IsMember({"layered-us", "sep-lvr", "degen-us", "kary-level", "centroid-vr"}));
  col_cmd->add_option("--l", col.l, "path length bound for sep-lvr")->check(CLI::PositiveNumber);
  col_cmd->add_option("-i,--input", col.input, "input graph file ('-' for stdin)")->required();
  col_cmd->add_option("-o,--output", col.output, "output coloring file (default stdout)");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "check a coloring against a ranking condition");
  val_cmd->add_option("--kind", val.kind, "condition to check")
      ->check(CLI::IsMember({"proper", "us", "lvr", "vr"}));
  val_cmd->add_option("--l", val.l, "path length bound for lvr")->check(CLI::PositiveNumber);
  val_cmd->add_option("-i,--input", val.input, "graph file ('-' for stdin)")->required();
  val_cmd->add_option("-c,--coloring", val.coloring, "coloring file")->required();

  ExactArgs ex;
  auto* ex_cmd = app.add_subcommand("exact", "smallest number of colors by exhaustive search");
  ex_cmd->add_option("--kind", ex.kind, "ranking kind")
      ->check(CLI::IsMember({"us", "lvr", "vr"}));
  ex_cmd->add_option("--l", ex.l, "path length bound for lvr")->check(CLI::PositiveNumber);
  ex_cmd->add_option("--max-k", ex.max_k, "largest color count to try (default n)")
      ->check(CLI::NonNegativeNumber);
  ex_cmd->add_option("--budget", ex.budget, "search node budget");
  ex_cmd->add_option("-i,--input", ex.input, "graph file ('-' for stdin)")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "color-budget experiment, CSV output");
  bench_cmd->add_option("--suite", bench.suite, "benchmark suite")
      ->required()
      ->check(CLI::IsMember({"planar-us", "planar-lvr", "degen-us", "tree-exact"}));
  bench_cmd->add_option("--sizes", bench.sizes, "ascending comma-separated sizes")->required();
  bench_cmd->add_option("--l", bench.l, "path length bound for planar-lvr")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--threads", bench.threads, "worker threads (0: all cores)");
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  SelfCheckOptions sc;
  auto* sc_cmd = app.add_subcommand("selfcheck", "tree predicate tables and hierarchy fuzz");
  sc_cmd->add_option("--max-n", sc.tree_max_n, "largest rooted tree size")
      ->check(CLI::Range(0, 10));
  sc_cmd->add_option("--k", sc.k, "total colors")->check(CLI::Range(3, 31));
  sc_cmd->add_option("--fuzz", sc.fuzz_cases, "hierarchy fuzz cases")
      ->check(CLI::NonNegativeNumber);
  sc_cmd->add_option("--seed", sc.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_generate(gen);
    if (*col_cmd) return run_color(col);
    if (*val_cmd) return run_validate(val);
    if (*ex_cmd) return run_exact(ex);
    if (*bench_cmd) return run_bench_cmd(bench);
    return run_selfcheck_cmd(sc);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ColoringIncomplete& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAlgorithm;
  }
}
