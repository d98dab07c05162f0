#include "vrank/selfcheck.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "vrank/exact.hpp"
#include "vrank/generators.hpp"
#include "vrank/rng.hpp"

namespace vrank {

std::vector<TreePredicateRow> tree_predicate_table(int max_n, Color k) {
  std::vector<TreePredicateRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    for_each_rooted_tree(n, [&](const RootedTree& t) {
      const Graph g = t.graph();
      TreePredicateRow row;
      row.tree = t;
      row.us_number = exact_rank_number(g, RankKind::us(), static_cast<Color>(n) + 1).k;
      const auto table = root_color_table(g, t.root(), k);
      row.p.assign(static_cast<std::size_t>(k), false);
      for (Color i = 1; i <= k - 1; ++i) {
        bool all = true;
        for (Color l = i; l <= k - 1; ++l) {
          for (Color m = i; m <= k - 1; ++m) {
            all = all && table[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
          }
        }
        row.p[static_cast<std::size_t>(i)] = all;
      }
      rows.push_back(std::move(row));
      return true;
    });
  }
  return rows;
}

namespace {

std::string levels_string(const RootedTree& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.levels.size(); ++i) out << (i ? "," : "") << t.levels[i];
  out << ']';
  return out.str();
}

SelfCheckRow row(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? SelfCheckRow::Status::Pass : SelfCheckRow::Status::Fail,
          std::move(detail)};
}

}  // namespace

std::vector<SelfCheckRow> run_selfcheck(const SelfCheckOptions& opt) {
  std::vector<SelfCheckRow> rows;
  const Color k = opt.k;
  const auto table = tree_predicate_table(opt.tree_max_n, k);

  {
    std::size_t obs_checked = 0;
    std::size_t bad = 0;
    std::size_t p_true = 0;
    for (const auto& r : table) {
      for (Color i = 1; i <= k - 1; ++i) {
        const bool p = r.p[static_cast<std::size_t>(i)];
        p_true += p;
        // p_i = 1 needs a us-coloring with k-1 colors.
        if (p && r.us_number > k - 1) ++bad;
        if (r.us_number >= k) {
          ++obs_checked;
          if (p) ++bad;
        }
      }
    }
    std::ostringstream d;
    d << table.size() << " rooted trees n<=" << opt.tree_max_n << ", k=" << k << ", "
      << p_true << " true p_i entries, " << obs_checked << " entries with us>=k, " << bad
      << " contradictions";
    rows.push_back(row("p_i vs exact us-number", bad == 0, d.str()));
  }

  {
    // Same direction with k set to each tree's own us-number, so trees that
    // need every color are actually exercised.
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (const auto& r : table) {
      const Color own = r.us_number;
      if (own < 3) continue;
      const Graph g = r.tree.graph();
      for (Color i = 1; i <= own - 1; ++i) {
        ++checked;
        if (p_predicate(g, r.tree.root(), i, own)) ++bad;
      }
    }
    rows.push_back(row("p_i = 0 when us = k", checked > 0 && bad == 0,
                       std::to_string(checked) + " (tree, i) pairs at k = us(T), " +
                           std::to_string(bad) + " contradictions"));
  }

  {
    std::size_t breaks = 0;
    for (const auto& r : table) {
      for (Color i = 1; i + 1 <= k - 1; ++i) {
        if (r.p[static_cast<std::size_t>(i)] && !r.p[static_cast<std::size_t>(i) + 1]) ++breaks;
      }
    }
    rows.push_back(row("p_i monotone in i", breaks == 0,
                       std::to_string(breaks) + " trees with p_i=1, p_(i+1)=0"));
  }

  std::vector<std::optional<MinFWitness>> f(static_cast<std::size_t>(k));
  {
    std::ostringstream d;
    for (Color i = 1; i <= k - 1; ++i) {
      f[static_cast<std::size_t>(i)] = min_f(i, k, opt.tree_max_n);
      d << (i > 1 ? ", " : "") << "f(" << i << ")=";
      if (const auto& w = f[static_cast<std::size_t>(i)]) {
        d << w->n << " " << levels_string(w->tree);
      } else {
        d << ">" << opt.tree_max_n;
      }
    }
    rows.push_back({"min_f table", SelfCheckRow::Status::Pass, d.str()});
  }

  {
    const auto& f1 = f[1];
    std::ostringstream d;
    if (!f1) {
      d << "f(1) > " << opt.tree_max_n << ", claimed k-2=" << k - 2;
      rows.push_back({"f(1) = k-2", SelfCheckRow::Status::Note, d.str()});
    } else {
      d << "measured f(1)=" << f1->n << ", claimed k-2=" << k - 2;
      if (f1->n == k - 2) {
        rows.push_back({"f(1) = k-2", SelfCheckRow::Status::Pass, d.str() + ", agree"});
      } else {
        d << ", discrepancy under the literal p_1 definition (witness levels "
          << levels_string(f1->tree) << ")";
        rows.push_back({"f(1) = k-2", SelfCheckRow::Status::Note, d.str()});
      }
    }
  }

  {
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (Color i = 2; i <= k - 3; ++i) {
      const auto& lo = f[static_cast<std::size_t>(i) - 1];
      const auto& hi = f[static_cast<std::size_t>(i)];
      if (!lo || !hi) continue;
      ++checked;
      if (hi->n < 1 + (k - i - 1) * lo->n) ++bad;
    }
    rows.push_back(row("f(i) >= 1+(k-i-1)f(i-1)", bad == 0,
                       std::to_string(checked) + " determined instances, " +
                           std::to_string(bad) + " violations"));
  }

  {
    Rng rng(opt.seed);
    std::size_t bad = 0;
    std::size_t vr_valid = 0;
    for (int trial = 0; trial < opt.fuzz_cases; ++trial) {
      const auto n = static_cast<Vertex>(1 + uniform_below(rng, 9));
      const double p = 0.15 + 0.6 * uniform_unit(rng);
      const Graph g = random_gnp(n, p, rng());
      const auto palette = 1 + uniform_below(rng, static_cast<std::uint64_t>(n) + 1);
      Coloring c(std::vector<Color>(static_cast<std::size_t>(n)));
      for (auto& col : c.colors) col = static_cast<Color>(1 + uniform_below(rng, palette));
      const bool vr = !is_vr(g, c);
      vr_valid += vr;
      bool longer_ok = vr;
      for (int l = 4; l >= 1; --l) {
        const bool ok = !is_l_vr(g, c, l);
        // Valid for a bound implies valid for every smaller one.
        if (longer_ok && !ok) ++bad;
        longer_ok = ok;
      }
      // Bound 1 is exactly properness.
      if (longer_ok != !is_proper(g, c)) ++bad;
    }
    rows.push_back(row("hierarchy fuzz", bad == 0,
                       std::to_string(opt.fuzz_cases) + " cases, " + std::to_string(vr_valid) +
                           " full rankings, " + std::to_string(bad) + " counterexamples"));
  }
  return rows;
}

void print_selfcheck(std::ostream& out, const std::vector<SelfCheckRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    const char* tag = r.status == SelfCheckRow::Status::Pass   ? "PASS"
                      : r.status == SelfCheckRow::Status::Fail ? "FAIL"
                                                               : "NOTE";
    out << tag << "  " << r.name << std::string(width - r.name.size(), ' ') << "  " << r.detail
        << '\n';
  }
}

bool selfcheck_passed(const std::vector<SelfCheckRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const SelfCheckRow& r) {
    return r.status == SelfCheckRow::Status::Fail;
  });
}

}  // namespace vrank
