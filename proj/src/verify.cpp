#include "kcut/verify.hpp"

#include <algorithm>
#include <functional>

#include "kcut/cut_solve.hpp"
#include "kcut/kcut_lp.hpp"
#include "kcut/mincut.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"

namespace kcut {

namespace {

struct Outcome {
  RowStatus status;
  std::string detail;
};

Outcome pass(std::string detail) { return {RowStatus::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {RowStatus::kFail, std::move(detail)}; }
Outcome check(bool ok, std::string detail) { return {ok ? RowStatus::kPass : RowStatus::kFail, std::move(detail)}; }

class Battery {
 public:
  explicit Battery(VerifyReport& report) : report_(report) {}

  void run(const std::string& name, bool oracle, const std::function<Outcome()>& body) {
    VerifyRow row;
    row.name = name;
    row.oracle = oracle;
    try {
      auto out = body();
      row.status = out.status;
      row.detail = std::move(out.detail);
    } catch (const oracle::LimitExceeded& e) {
      row.status = RowStatus::kSkipped;
      row.detail = std::string("beyond oracle limits: ") + e.what();
    } catch (const std::exception& e) {
      row.status = RowStatus::kFail;
      row.detail = std::string("exception: ") + e.what();
    }
    report_.rows.push_back(std::move(row));
  }

 private:
  VerifyReport& report_;
};

std::vector<VertexPartition> partitions_of(const std::vector<CutResult>& cuts) {
  std::vector<VertexPartition> out;
  for (const auto& c : cuts) out.push_back(c.partition);
  std::sort(out.begin(), out.end());
  return out;
}

std::string ratio_note(const Rational& value, const Rational& lp, const Rational& bound) {
  if (sgn(lp) == 0) return "value " + to_string(value) + " with LP value 0";
  Rational r = value / lp;
  std::string s = "ratio " + to_string(r) + " vs 2(1-1/n) = " + to_string(bound);
  if (r == bound) s += " (tight)";
  return s;
}

}  // namespace

int VerifyReport::count(RowStatus s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const VerifyRow& r) { return r.status == s; }));
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::kPass:
      return "pass";
    case RowStatus::kFail:
      return "fail";
    case RowStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

VerifyReport verify_graph(const Graph& g, const VerifyOptions& options) {
  VerifyReport report;
  Battery battery(report);
  const int n = g.vertex_count();
  if (n < 2) {
    report.rows.push_back(VerifyRow{"graph", RowStatus::kSkipped, "fewer than two vertices", false});
    return report;
  }
  std::vector<int> ks = options.ks;
  if (ks.empty()) {
    for (int k = 2; k <= std::min(n, 5); ++k) ks.push_back(k);
  }
  const auto& limits = options.limits;
  const Rational bound = 2 * ratio(n - 1, n);

  PrincipalSequence psp;
  battery.run("psp_consistency", false, [&] {
    psp = principal_sequence(g);
    auto other = sequence_from_breakpoints(g);
    if (psp.level_count() != other.level_count()) return fail("level counts differ");
    for (int i = 1; i <= psp.level_count(); ++i) {
      if (psp.lambda(i) != other.lambda(i) || psp.partition(i) != other.partition(i)) {
        return fail("level " + std::to_string(i) + " differs");
      }
    }
    return pass(std::to_string(psp.level_count()) + " levels");
  });
  if (report.rows.back().status == RowStatus::kFail) return report;

  if (g.component_count() == 1) {
    battery.run("tree_packing_equals_strength", false, [&] {
      auto s = strength(g);
      auto p = exact_pack(g, g.capacities());
      return check(s.sigma == p.total_value, "strength " + to_string(s.sigma) + ", packing " + to_string(p.total_value));
    });
    battery.run("oracle_strength", true, [&] {
      auto s = strength(g);
      auto o = oracle::oracle_strength(g, limits);
      auto t = oracle::oracle_treepack(g, limits);
      return check(s.sigma == o.sigma && s.sigma == t && s.partition == o.argmin,
                   "oracle strength " + to_string(o.sigma) + ", oracle packing " + to_string(t));
    });
    battery.run("global_mincut", false, [&] {
      auto mc = global_mincut(g);
      auto exact = min_kcut(g, 2);
      return check(mc.cut.value == exact.best.value,
                   "2-respecting scan " + to_string(mc.cut.value) + ", k-cut solver " + to_string(exact.best.value));
    });
  }

  for (int k : ks) {
    const std::string suffix = " k=" + std::to_string(k);
    if (k < 2 || k > n) {
      report.rows.push_back(VerifyRow{"k_range" + suffix, RowStatus::kSkipped, "k outside 2..n", false});
      continue;
    }
    PrimalSolution x;
    DualSolution y;
    bool have_lp = false;
    battery.run("strong_duality" + suffix, false, [&] {
      x = lp_primal(g, psp, k);
      y = lp_dual(g, psp, k);
      have_lp = true;
      auto lag = lagrangean_value(psp, k);
      return check(x.objective == y.objective && x.objective == lag.value,
                   "primal " + to_string(x.objective) + ", dual " + to_string(y.objective) + ", lagrangean " +
                       to_string(lag.value));
    });
    if (!have_lp) continue;
    battery.run("primal_feasible" + suffix, false, [&] {
      auto v = verify_primal(g, x.x, k);
      return check(v.feasible, v.detail);
    });
    battery.run("dual_feasible" + suffix, false, [&] {
      auto v = verify_dual(g, y);
      return check(v.feasible, v.detail);
    });
    battery.run("complementary_slackness" + suffix, false, [&] {
      auto cs = check_complementary_slackness(g, x.x, y);
      std::string detail;
      for (int i = 0; i < 3; ++i) {
        if (!cs.holds[static_cast<std::size_t>(i)]) detail += cs.detail[static_cast<std::size_t>(i)] + "; ";
      }
      return check(cs.all(), cs.all() ? "all three conditions hold" : detail);
    });
    battery.run("oracle_lp_value" + suffix, true, [&] {
      auto v = oracle::oracle_lp_value(g, k, limits);
      return check(v == x.objective, "brute-force LP " + to_string(v));
    });

    KCutSolution solution;
    bool solved = false;
    battery.run("min_kcut" + suffix, false, [&] {
      solution = min_kcut(g, k);
      solved = true;
      auto approx = min_kcut(g, k, SolveOptions{SolveMode::kApprox, 0});
      return check(approx.best.value == solution.best.value,
                   "exact " + to_string(solution.best.value) + " (" + std::to_string(solution.minimizers.size()) +
                       " minimizers), multiplicative weights " + to_string(approx.best.value));
    });
    if (!solved) continue;
    battery.run("oracle_min_kcut" + suffix, true, [&] {
      auto o = oracle::oracle_min_kcut(g, k, limits);
      return check(o.best.value == solution.best.value && o.minimizers == partitions_of(solution.minimizers),
                   "oracle " + to_string(o.best.value) + " with " + std::to_string(o.minimizers.size()) + " minimizers");
    });
    battery.run("integrality_gap" + suffix, false, [&] {
      return check(solution.best.value <= bound * x.objective, ratio_note(solution.best.value, x.objective, bound));
    });
    battery.run("dual_lower_bound" + suffix, false, [&] {
      Rational zsum = 0;
      for (const auto& z : y.z) zsum += z;
      Rational lhs = (k - 1) * y.tree_total;
      Rational rhs = Rational(n) / (2 * (n - 1)) * solution.best.value + zsum;
      return check(lhs >= rhs, "(k-1) sum y = " + to_string(lhs) + ", n/(2(n-1)) lambda_k + z(E) = " + to_string(rhs));
    });
    battery.run("respecting_tree_witness" + suffix, false, [&] {
      if (sgn(solution.best.value) == 0 || y.packing.trees.empty()) return Outcome{RowStatus::kSkipped, "zero optimum"};
      const int h = 2 * k - 3;
      for (const auto& m : solution.minimizers) {
        auto stats = respect_stats(y.packing, crossing_edges(g, m.partition), h, Rational(1), k, n);
        if (stats.min_crossing > h || stats.q < *stats.bound) {
          return fail("a minimizer crosses every tree more than " + std::to_string(h) + " times or q below bound");
        }
      }
      return pass("every minimizer is " + std::to_string(h) + "-respected with q above the bound");
    });
    battery.run("rounding_bound" + suffix, false, [&] {
      auto r = round_lp(g, x);
      bool ok = r.certified && r.cut.k_achieved() >= k && r.cut.value <= bound * x.objective;
      return check(ok, "rounded " + to_string(r.cut.value) + ", " + ratio_note(r.cut.value, x.objective, bound));
    });
    battery.run("ravi_sinha_bound" + suffix, false, [&] {
      auto c = ravi_sinha_cut(g, psp, k);
      bool ok = c.k_achieved() >= k && c.value <= bound * x.objective;
      return check(ok, "cut " + to_string(c.value) + ", " + ratio_note(c.value, x.objective, bound));
    });
  }
  return report;
}

}  // namespace kcut
