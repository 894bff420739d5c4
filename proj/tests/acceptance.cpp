// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact rational equality or an exact
// rational inequality; the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "kcut/cut_solve.hpp"
#include "kcut/kcut_lp.hpp"
#include "kcut/mincut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/serialize.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"

namespace {

using namespace kcut;
using kcut::testing::NamedGraph;

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++count_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  int count() const { return count_; }
  long checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int count_ = 0;
  long checks_ = 0;
  std::vector<std::string> notes_;
};

std::string at(const std::string& graph, int k = 0) {
  return k == 0 ? graph : graph + " k=" + std::to_string(k);
}

std::string show(const Rational& a, const char* rel, const Rational& b) {
  return to_string(a) + " " + rel + " " + to_string(b);
}

Rational two_ratio(int n) { return 2 * (1 - ratio(1, n)); }

std::vector<VertexPartition> partitions_of(const std::vector<CutResult>& cuts) {
  std::vector<VertexPartition> out;
  for (const auto& c : cuts) out.push_back(c.partition);
  return out;
}

void tutte_nash_williams(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto sigma = strength(g).sigma;
    auto packed = exact_pack(g, g.capacities()).total_value;
    auto brute = oracle::oracle_treepack(g);
    f.expect(sigma == packed && packed == brute,
             at(name) + ": strength " + to_string(sigma) + ", packing " + to_string(packed) + ", oracle " + to_string(brute));
  }
}

void psp_correctness(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    auto from_bp = sequence_from_breakpoints(g);
    if (psp.level_count() != from_bp.level_count()) {
      f.expect(false, at(name) + ": level counts differ");
      continue;
    }
    for (int i = 1; i <= psp.level_count(); ++i) {
      f.expect(psp.lambda(i) == from_bp.lambda(i) && psp.partition(i) == from_bp.partition(i),
               at(name) + ": level " + std::to_string(i) + " differs from the breakpoint sequence");
      // The finest minimizer at lambda_i is P_i; the coarsest is P_{i-1}.
      auto exact = oracle::oracle_attack(g, psp.lambda(i));
      f.expect(exact.finest == psp.partition(i) && exact.coarsest == psp.partition(i - 1),
               at(name) + ": brute-force minimizers at lambda_" + std::to_string(i));
      for (const Rational& b : std::vector<Rational>{psp.lambda(i) - ratio(1, 7), psp.lambda(i), psp.lambda(i) + ratio(1, 7)}) {
        if (b < 0) continue;
        auto fast = attack(g, b);
        auto slow = oracle::oracle_attack(g, b);
        f.expect(fast.value == slow.value && fast.coarsest == slow.coarsest && fast.finest == slow.finest,
                 at(name) + ": attack at b = " + to_string(b));
      }
    }
  }
  auto tt = principal_sequence(kcut::testing::tt());
  bool shape = tt.level_count() == 2 && tt.lambda(1) == 1 && tt.lambda(2) == ratio(3, 2) && tt.kappa(1) == 2 &&
               tt.kappa(2) == 6;
  f.expect(shape, "TT: expected lambda = (1, 3/2), kappa = (2, 6)");
}

void lp_triple_equality(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    for (int k = 2; k <= g.vertex_count(); ++k) {
      auto primal = lp_primal(g, psp, k).objective;
      auto dual = lp_dual(g, psp, k).objective;
      auto lag = lagrangean_value(psp, k).value;
      f.expect(primal == dual && dual == lag,
               at(name, k) + ": primal " + to_string(primal) + ", dual " + to_string(dual) + ", lagrangean " + to_string(lag));
      if (g.vertex_count() <= 6) {
        auto brute = oracle::oracle_lp_value(g, k);
        f.expect(primal == brute, at(name, k) + ": oracle LP " + show(brute, "vs", primal));
      }
    }
  }
  struct Fixture {
    const char* name;
    Graph g;
    int k;
    Rational value;
  };
  for (const auto& [name, g, k, value] : std::vector<Fixture>{{"TT", kcut::testing::tt(), 3, ratio(5, 2)},
                                                             {"C5", kcut::testing::c5(), 2, ratio(5, 4)},
                                                             {"K4", kcut::testing::k4(), 3, Rational(4)}}) {
    auto got = lp_primal(g, principal_sequence(g), k).objective;
    f.expect(got == value, at(name, k) + ": LP value " + show(got, "expected", value));
  }
}

void certificates(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    for (int k = 2; k <= g.vertex_count(); ++k) {
      auto x = lp_primal(g, psp, k);
      auto pv = verify_primal(g, x.x, k);
      f.expect(pv.feasible && pv.bounds_ok, at(name, k) + ": primal " + pv.detail);
      for (auto mode : {DualMode::kExplicit, DualMode::kLazy}) {
        auto dual = lp_dual(g, psp, k, mode);
        auto dv = verify_dual(g, dual);
        f.expect(dv.feasible, at(name, k) + ": dual " + dv.detail);
      }
      // Slackness inspects individual trees, which only the explicit dual lists.
      auto cs = check_complementary_slackness(g, x.x, lp_dual(g, psp, k));
      for (int c = 0; c < 3; ++c) {
        f.expect(cs.holds[c], at(name, k) + ": slackness condition " + std::to_string(c + 1) + " " + cs.detail[c]);
      }
    }
  }
}

void integrality_gap(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    const int n = g.vertex_count();
    for (int k = 2; k <= n; ++k) {
      auto lp = lp_primal(g, psp, k).objective;
      auto best = oracle::oracle_min_kcut(g, k).best.value;
      f.expect(best <= two_ratio(n) * lp, at(name, k) + ": " + show(best, "exceeds 2(1-1/n) times", lp));
    }
  }
  auto tight = [&](const char* name, const Graph& g, const Rational& expected) {
    auto lp = lp_primal(g, principal_sequence(g), 2).objective;
    Rational r = oracle::oracle_min_kcut(g, 2).best.value / lp;
    f.expect(r == expected && r == two_ratio(g.vertex_count()), at(name, 2) + ": ratio " + show(r, "expected", expected));
  };
  tight("C5", kcut::testing::c5(), ratio(8, 5));
  tight("K4", kcut::testing::k4(), ratio(3, 2));
}

void rounding_and_ravi_sinha(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    const int n = g.vertex_count();
    for (int k = 2; k <= n; ++k) {
      auto lp = lp_primal(g, psp, k);
      Rational bound = two_ratio(n) * lp.objective;
      auto rounded = round_lp(g, lp);
      f.expect(rounded.cut.k_achieved() >= k && rounded.cut.value == crossing_value(g, rounded.cut.partition) &&
                   rounded.cut.value <= bound,
               at(name, k) + ": rounded " + to_string(rounded.cut.value) + " with " +
                   std::to_string(rounded.cut.k_achieved()) + " parts, bound " + to_string(bound));
      auto rs = ravi_sinha_cut(g, psp, k);
      f.expect(rs.k_achieved() >= k && rs.value == crossing_value(g, rs.partition) && rs.value <= bound,
               at(name, k) + ": Ravi-Sinha " + to_string(rs.value) + " with " + std::to_string(rs.k_achieved()) +
                   " parts, bound " + to_string(bound));
    }
  }
}

void kcut_optimality(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    auto psp = principal_sequence(g);
    const int n = g.vertex_count();
    for (int k = 2; k <= std::min(n, 5); ++k) {
      auto oracle = oracle::oracle_min_kcut(g, k);
      auto exact = min_kcut(g, k);
      f.expect(exact.best.value == oracle.best.value, at(name, k) + ": exact " + show(exact.best.value, "vs oracle", oracle.best.value));
      f.expect(partitions_of(exact.minimizers) == oracle.minimizers,
               at(name, k) + ": " + std::to_string(exact.minimizers.size()) + " minimizers vs oracle " +
                   std::to_string(oracle.minimizers.size()));
      auto approx = min_kcut(g, k, SolveOptions{SolveMode::kApprox, 1.0 / (2 * k)});
      f.expect(approx.best.value == oracle.best.value, at(name, k) + ": approx " + show(approx.best.value, "vs oracle", oracle.best.value));
      auto packing = dual_packing(g, psp, k, SolveOptions{});
      for (const auto& p : oracle.minimizers) {
        auto stats = respect_stats(packing, crossing_edges(g, p), 2 * k - 3);
        f.expect(stats.min_crossing <= 2 * k - 3,
                 at(name, k) + ": no support tree (2k-3)-respects an optimal cut (min crossing " +
                     std::to_string(stats.min_crossing) + ")");
      }
    }
  }
}

void mincut_and_respect(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    const int n = g.vertex_count();
    auto oracle2 = oracle::oracle_min_kcut(g, 2);
    auto mine = global_mincut(g);
    f.expect(mine.cut.value == oracle2.best.value && mine.cut.k_achieved() == 2,
             at(name) + ": mincut " + show(mine.cut.value, "vs oracle", oracle2.best.value));
    auto exact = exact_pack(g, g.capacities());
    Rational q2_bound = ratio(1, 2) + ratio(1, n);
    for (const auto& p : oracle2.minimizers) {
      if (p.part_count() != 2) continue;
      auto stats = respect_stats(exact, crossing_edges(g, p), 2);
      f.expect(stats.q >= q2_bound, at(name) + ": q_2 " + show(stats.q, "below", q2_bound));
    }
    auto psp = principal_sequence(g);
    for (int k = 2; k <= std::min(n, 5); ++k) {
      auto packing = dual_packing(g, psp, k, SolveOptions{});
      for (const auto& p : oracle::oracle_min_kcut(g, k).minimizers) {
        auto stats = respect_stats(packing, crossing_edges(g, p), 2 * k - 3, Rational(1), k, n);
        f.expect(stats.q >= *stats.bound, at(name, k) + ": q_h " + show(stats.q, "below", *stats.bound));
      }
    }
  }
}

void approximate_completeness(const std::vector<NamedGraph>& suite, Failures& f) {
  for (const auto& [name, g] : suite) {
    for (int k = 2; k <= std::min(g.vertex_count(), 3); ++k) {
      auto best = oracle::oracle_min_kcut(g, k).best.value;
      for (const Rational& alpha : std::vector<Rational>{Rational(1), ratio(4, 3), ratio(3, 2)}) {
        auto report = enumerate_approx_kcuts(g, k, alpha);
        auto expected = oracle::oracle_cuts_within(g, k, alpha * best);
        f.expect(report.complete && partitions_of(report.cuts) == partitions_of(expected),
                 at(name, k) + " alpha=" + to_string(alpha) + ": " + std::to_string(report.cuts.size()) +
                     " cuts vs oracle " + std::to_string(expected.size()));
      }
    }
  }
}

void mwu_contract(const std::vector<NamedGraph>& suite, Failures& f) {
  struct Eps {
    double value;
    Rational exact;
  };
  for (const auto& [name, g] : suite) {
    auto sigma = strength(g).sigma;
    for (const auto& [eps, eps_q] : std::vector<Eps>{{0.2, ratio(1, 5)}, {0.1, ratio(1, 10)}, {0.05, ratio(1, 20)}}) {
      PackConfig cfg;
      cfg.epsilon = eps;
      auto first = mwu_pack(g, g.capacities(), cfg);
      Rational floor = (1 - eps_q) * sigma;
      f.expect(first.total_value >= floor, at(name) + " eps=" + to_string(eps_q) + ": " + show(first.total_value, "below", floor));
      bool within = true;
      for (int e = 0; e < g.edge_count(); ++e) {
        within = within && first.loads[static_cast<std::size_t>(e)] <= g.edge(e).capacity;
      }
      f.expect(within, at(name) + " eps=" + to_string(eps_q) + ": load above capacity");
      auto again = mwu_pack(g, g.capacities(), cfg);
      f.expect(io::dump(io::packing(first)) == io::dump(io::packing(again)),
               at(name) + " eps=" + to_string(eps_q) + ": repeated run produced different JSON");
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(const std::vector<NamedGraph>&, Failures&)> run;
};

}  // namespace

int main() {
  const auto suite = kcut::testing::suite(50);
  const std::vector<Criterion> criteria{
      {1, "strength = exact packing = brute-force packing", 60, tutte_nash_williams},
      {2, "principal sequence vs breakpoints and brute-force attack", 60, psp_correctness},
      {3, "LP primal = dual = lagrangean = brute-force LP", 120, lp_triple_equality},
      {4, "primal, dual and complementary-slackness certificates", 120, certificates},
      {5, "integrality gap at most 2(1-1/n), tight on C5 and K4", 120, integrality_gap},
      {6, "rounding and Ravi-Sinha within 2(1-1/n) of the LP", 120, rounding_and_ravi_sinha},
      {7, "exact and approximate min k-cut with all minimizers", 600, kcut_optimality},
      {8, "global mincut and tree-respect fractions", 120, mincut_and_respect},
      {9, "approximate cut enumeration is complete", 120, approximate_completeness},
      {10, "multiplicative-weights packing contract and determinism", 120, mwu_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(suite, f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      std::ostringstream note;
      note << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      f.expect(false, note.str());
    }
    bool ok = f.count() == 0;
    if (!ok) ++failed;
    std::printf("%s [%2d] %s (%ld checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, f.checks(),
                seconds, c.limit_seconds);
    for (const auto& note : f.notes()) std::printf("       %s\n", note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
