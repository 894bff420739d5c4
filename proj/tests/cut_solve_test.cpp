#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "kcut/cut_solve.hpp"
#include "kcut/oracle.hpp"

using namespace kcut;
using namespace kcut::testing;

namespace {

std::vector<VertexPartition> partitions_of(const std::vector<CutResult>& cuts) {
  std::vector<VertexPartition> out;
  for (const auto& c : cuts) out.push_back(c.partition);
  std::sort(out.begin(), out.end());
  return out;
}

Rational two_ratio(int n) { return 2 * ratio(n - 1, n); }

}  // namespace

TEST_CASE("cuts_from_tree fixtures") {
  auto c = c5();
  std::vector<EdgeId> path{0, 1, 2, 3};
  auto cuts = cuts_from_tree(c, path, 1, 2);
  REQUIRE(cuts.size() == 4);
  for (const auto& cut : cuts) CHECK(cut.value == 2);

  auto e = e1();
  std::vector<EdgeId> only{0};
  auto ec = cuts_from_tree(e, only, 1, 2);
  REQUIRE(ec.size() == 1);
  CHECK(ec[0].value == 5);

  auto t = tt();
  std::vector<EdgeId> tree{0, 1, 3, 4, 6};
  auto tc = cuts_from_tree(t, tree, 3, 3);
  auto target = parts1({{1}, {2, 3}, {4, 5, 6}}, 6);
  bool found = false;
  for (const auto& cut : tc) {
    CHECK(cut.k_achieved() >= 3);
    if (cut.partition == target) {
      found = true;
      CHECK(cut.value == 3);
    }
  }
  CHECK(found);
}

TEST_CASE("min_kcut fixtures") {
  auto t = tt();
  auto s2 = min_kcut(t, 2);
  CHECK(s2.best.value == 1);
  REQUIRE(s2.minimizers.size() == 1);
  CHECK(s2.minimizers[0].partition == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  CHECK(min_kcut(t, 4).best.value == 4);

  auto c = c5();
  auto s3 = min_kcut(c, 3);
  CHECK(s3.best.value == 3);
  CHECK(s3.minimizers.size() == 10);
  auto s2c = min_kcut(c, 2);
  CHECK(s2c.best.value == 2);
  CHECK(s2c.minimizers.size() == 10);

  auto k = k4();
  CHECK(min_kcut(k, 4).best.value == 6);
  CHECK_THROWS_AS(min_kcut(k, 5), std::invalid_argument);
  SolveOptions bad{SolveMode::kApprox, 0.4};
  CHECK_THROWS_AS(min_kcut(k, 2, bad), std::invalid_argument);
}

TEST_CASE("min_kcut on zero-capacity and disconnected graphs") {
  std::vector<Graph> graphs{
      parse_graph_string("p kcut 4 4\ne 1 2 3\ne 2 3 0\ne 3 4 2\ne 1 4 0\n"),
      parse_graph_string("p kcut 5 5\ne 1 2 1\ne 2 3 1\ne 1 3 1\ne 3 4 0\ne 4 5 2\n"),
      parse_graph_string("p kcut 5 3\ne 1 2 2\ne 2 3 1\ne 4 5 4\n"),
      parse_graph_string("p kcut 4 1\ne 1 2 1\n"),
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    CAPTURE(i);
    for (int k = 2; k <= g.vertex_count(); ++k) {
      CAPTURE(k);
      auto oracle = oracle::oracle_min_kcut(g, k);
      auto mine = min_kcut(g, k);
      CHECK(mine.best.value == oracle.best.value);
      CHECK(partitions_of(mine.minimizers) == oracle.minimizers);
      auto approx = min_kcut(g, k, SolveOptions{SolveMode::kApprox, 0});
      CHECK(approx.best.value == oracle.best.value);
    }
  }
}

TEST_CASE("enumerate_approx_kcuts fixtures") {
  auto c = enumerate_approx_kcuts(c5(), 2, Rational(1));
  CHECK(c.cuts.size() == 10);
  for (const auto& cut : c.cuts) CHECK(cut.value == 2);

  auto t = enumerate_approx_kcuts(tt(), 2, Rational(1));
  REQUIRE(t.cuts.size() == 1);
  CHECK(t.cuts[0].partition == parts1({{1, 2, 3}, {4, 5, 6}}, 6));

  auto k = enumerate_approx_kcuts(k4(), 2, Rational(4, 3));
  CHECK(k.cuts.size() == 7);
  int threes = 0;
  for (const auto& cut : k.cuts) threes += cut.value == 3 ? 1 : 0;
  CHECK(threes == 4);
  CHECK(k.h == 2);
}

TEST_CASE("respect bounds") {
  CHECK(respect_lower_bound(Rational(1), 3, 3, 6) == Rational(1, 6));
  CHECK(packing_respect_lower_bound(Rational(1), 1, 10, Rational(0)) == Rational(1, 5));
  CHECK(packing_respect_lower_bound(Rational(1), 2, 8, Rational(0)) == Rational(1, 2) + Rational(1, 8));
  auto e = e1();
  auto p = exact_pack(e, e.capacities());
  std::vector<EdgeId> cut{0};
  auto s = respect_stats(p, cut, 1);
  REQUIRE(s.crossings.size() == 1);
  CHECK(s.crossings[0] == 1);
  CHECK(s.q == 1);
  CHECK(cut_count_ceiling(1, 5, Rational(1, 2)) == 2 * 2 * 5);
}

TEST_CASE("round_lp fixtures") {
  auto c = c5();
  auto rc = round_lp(c, lp_primal(c, principal_sequence(c), 2));
  CHECK(rc.certified);
  CHECK(rc.cut.value == 2);
  CHECK(rc.cut.value == Rational(8, 5) * Rational(5, 4));

  auto t = tt();
  auto rt = round_lp(t, lp_primal(t, principal_sequence(t), 3));
  CHECK(rt.cut.value == 3);
  CHECK(rt.cut.k_achieved() == 3);
  CHECK(rt.cut.value <= Rational(5, 3) * Rational(5, 2));

  auto k = k4();
  auto rk = round_lp(k, lp_primal(k, principal_sequence(k), 2));
  CHECK(rk.cut.value == 3);

  auto fake = lp_primal(k, principal_sequence(k), 2);
  for (auto& v : fake.x) v = 1;
  auto rf = round_lp(k, fake);
  CHECK_FALSE(rf.certified);
  CHECK(rf.cut.k_achieved() >= 2);
  fake.x[0] = 2;
  CHECK_THROWS_AS(round_lp(k, fake), std::invalid_argument);
}

TEST_CASE("ravi_sinha_cut fixtures") {
  auto t = tt();
  auto psp = principal_sequence(t);
  auto r2 = ravi_sinha_cut(t, psp, 2);
  CHECK(r2.value == 1);
  CHECK(r2.partition == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  auto r3 = ravi_sinha_cut(t, psp, 3);
  CHECK(r3.value == 3);
  CHECK(r3.k_achieved() == 3);
  auto c = c5();
  auto r4 = ravi_sinha_cut(c, principal_sequence(c), 4);
  CHECK(r4.value == 4);
  CHECK(r4.k_achieved() == 4);
}

TEST_CASE("solver agrees with the oracle on the suite") {
  for (const auto& [name, g] : suite(25)) {
    CAPTURE(name);
    auto psp = principal_sequence(g);
    const int n = g.vertex_count();
    for (int k = 2; k <= std::min(n, 4); ++k) {
      CAPTURE(k);
      auto oracle = oracle::oracle_min_kcut(g, k);
      auto exact = min_kcut(g, k);
      CHECK(exact.best.value == oracle.best.value);
      CHECK(partitions_of(exact.minimizers) == oracle.minimizers);
      CHECK(min_kcut(g, k, SolveOptions{SolveMode::kApprox, 0}).best.value == oracle.best.value);

      auto lp = lp_primal(g, psp, k);
      auto rounded = round_lp(g, lp);
      CHECK(rounded.certified);
      CHECK(rounded.cut.k_achieved() >= k);
      CHECK(rounded.cut.value <= two_ratio(n) * lp.objective);
      auto rs = ravi_sinha_cut(g, psp, k);
      CHECK(rs.k_achieved() >= k);
      CHECK(rs.value <= two_ratio(n) * lp.objective);
      CHECK(oracle.best.value <= two_ratio(n) * lp.objective);

      auto packing = dual_packing(g, psp, k, SolveOptions{});
      for (const auto& p : oracle.minimizers) {
        auto stats = respect_stats(packing, crossing_edges(g, p), 2 * k - 3, Rational(1), k, n);
        CHECK(stats.min_crossing <= 2 * k - 3);
        CHECK(stats.q >= *stats.bound);
      }
    }
  }
}

TEST_CASE("approximate enumeration is complete on the suite") {
  for (const auto& [name, g] : suite(20)) {
    CAPTURE(name);
    for (int k = 2; k <= std::min(g.vertex_count(), 3); ++k) {
      auto best = oracle::oracle_min_kcut(g, k).best.value;
      for (const Rational& alpha : std::vector<Rational>{Rational(1), Rational(4, 3), Rational(3, 2)}) {
        CAPTURE(k);
        CAPTURE(to_string(alpha));
        auto report = enumerate_approx_kcuts(g, k, alpha);
        auto expected = oracle::oracle_cuts_within(g, k, alpha * best);
        CHECK(partitions_of(report.cuts) == partitions_of(expected));
        auto packing = dual_packing(g, principal_sequence(g), k, SolveOptions{});
        for (const auto& cut : expected) {
          auto stats = respect_stats(packing, crossing_edges(g, cut.partition), report.h);
          CHECK(stats.q > 0);
          CHECK(static_cast<double>(report.cuts.size()) <= to_double(cut_count_ceiling(report.h, g.vertex_count(), stats.q)));
        }
      }
    }
  }
}
