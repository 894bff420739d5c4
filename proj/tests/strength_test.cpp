#include "doctest.h"
#include "fixtures.hpp"
#include "kcut/max_flow.hpp"
#include "kcut/oracle.hpp"
#include "kcut/strength.hpp"

using namespace kcut;
using namespace kcut::testing;

TEST_CASE("max_flow_min_cut") {
  CHECK(max_flow_min_cut(e1(), 0, 1).value == 5);
  auto f = max_flow_min_cut(tt(), 0, 5);
  CHECK(f.value == 1);
  CHECK(f.source_side == std::vector<VertexId>{0, 1, 2});
  CHECK(max_flow_min_cut(k4(), 0, 1).value == 3);
}

TEST_CASE("max flow equals the brute-force separating cut") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(2, 7);
    int n = size(rng);
    auto g = random_connected(rng, n, 0.5);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int s = pick(rng);
    int t = pick(rng);
    if (s == t) continue;
    Rational best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!(mask >> s & 1u) || (mask >> t & 1u)) continue;
      std::vector<bool> in(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = mask >> v & 1u;
      auto c = boundary_value(g, in);
      if (best < 0 || c < best) best = c;
    }
    auto flow = max_flow_min_cut(g, s, t);
    CHECK(flow.value == best);
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (VertexId v : flow.source_side) in[static_cast<std::size_t>(v)] = true;
    CHECK(boundary_value(g, in) == best);
  }
}

TEST_CASE("attack on fixtures") {
  auto a = attack(tt(), Rational(1));
  CHECK(a.value == 0);
  CHECK(a.coarsest == VertexPartition::whole(6));
  CHECK(a.finest == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  auto b = attack(tt(), Rational(2));
  CHECK(b.value == -3);
  CHECK(b.finest == VertexPartition::singletons(6));
  CHECK(b.coarsest == VertexPartition::singletons(6));
  auto c = attack(c5(), Rational(1));
  CHECK(c.value == 0);
  CHECK(c.coarsest == VertexPartition::whole(5));
}

TEST_CASE("breakpoints on fixtures") {
  auto t = breakpoints(tt());
  REQUIRE(t.size() == 2);
  CHECK(t[0].b == 1);
  CHECK(t[0].before == VertexPartition::whole(6));
  CHECK(t[0].after == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  CHECK(t[1].b == Rational(3, 2));
  CHECK(t[1].before == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  CHECK(t[1].after == VertexPartition::singletons(6));

  auto c = breakpoints(c5());
  REQUIRE(c.size() == 1);
  CHECK(c[0].b == Rational(5, 4));
  auto e = breakpoints(e1());
  REQUIRE(e.size() == 1);
  CHECK(e[0].b == 5);
}

TEST_CASE("strength on fixtures") {
  auto t = strength(tt());
  CHECK(t.sigma == 1);
  CHECK(t.partition == parts1({{1, 2, 3}, {4, 5, 6}}, 6));
  CHECK(strength(c5()).sigma == Rational(5, 4));
  CHECK(strength(c5()).partition == VertexPartition::singletons(5));
  CHECK(strength(k4()).sigma == 2);
  CHECK_THROWS_AS(strength(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("principal sequence on fixtures") {
  auto t = principal_sequence(tt());
  REQUIRE(t.level_count() == 2);
  CHECK(t.lambda(1) == 1);
  CHECK(t.lambda(2) == Rational(3, 2));
  CHECK(t.kappa(0) == 1);
  CHECK(t.kappa(1) == 2);
  CHECK(t.kappa(2) == 6);
  CHECK(t.levels[0].increment == std::vector<EdgeId>{6});
  CHECK(t.levels[1].split_components.size() == 2);
  CHECK(t.levels[1].cumulative.size() == 7);

  auto c = principal_sequence(c5());
  REQUIRE(c.level_count() == 1);
  CHECK(c.lambda(1) == Rational(5, 4));
  auto k = principal_sequence(k4());
  REQUIRE(k.level_count() == 1);
  CHECK(k.lambda(1) == 2);
}

TEST_CASE("attack, breakpoints and the sequence agree with brute force") {
  for (const auto& [name, g] : suite(40)) {
    CAPTURE(name);
    auto psp = principal_sequence(g);
    auto from_bp = sequence_from_breakpoints(g);
    REQUIRE(psp.level_count() == from_bp.level_count());
    int total_increase = 0;
    for (int i = 1; i <= psp.level_count(); ++i) {
      CHECK(psp.lambda(i) == from_bp.lambda(i));
      CHECK(psp.partition(i) == from_bp.partition(i));
      CHECK(psp.partition(i).refines(psp.partition(i - 1)));
      CHECK(psp.kappa(i) > psp.kappa(i - 1));
      if (i > 1) CHECK(psp.lambda(i) > psp.lambda(i - 1));
      total_increase += psp.kappa(i) - psp.kappa(i - 1);
      for (const Rational& b : std::vector<Rational>{psp.lambda(i) - Rational(1, 7), psp.lambda(i), psp.lambda(i) + Rational(1, 7)}) {
        if (b < 0) continue;
        auto fast = attack(g, b);
        auto slow = oracle::oracle_attack(g, b);
        CHECK(fast.value == slow.value);
        CHECK(fast.coarsest == slow.coarsest);
        CHECK(fast.finest == slow.finest);
      }
    }
    CHECK(total_increase == g.vertex_count() - 1);
    CHECK(psp.levels.back().partition == VertexPartition::singletons(g.vertex_count()));
    CHECK(static_cast<int>(psp.levels.back().cumulative.size()) == g.edge_count());
    CHECK(strength(g).sigma == oracle::oracle_strength(g).sigma);
    CHECK(strength(g).partition == oracle::oracle_strength(g).argmin);
    CHECK(psp.level_count() <= g.vertex_count() - 1);
  }
}

TEST_CASE("attack function is concave and non-increasing") {
  for (const auto& [name, g] : suite(15)) {
    CAPTURE(name);
    std::vector<Rational> values;
    const Rational step(1, 3);
    for (int i = 0; i <= 40; ++i) values.push_back(attack(g, step * i).value);
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] <= values[i - 1]);
    for (std::size_t i = 1; i + 1 < values.size(); ++i) CHECK(values[i - 1] + values[i + 1] <= 2 * values[i]);
  }
}
