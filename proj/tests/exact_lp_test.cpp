#include "doctest.h"
#include "kcut/exact_lp.hpp"

using namespace kcut;

TEST_CASE("ExactLp solves a small packing LP") {
  // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3
  ExactLp lp({Rational(4), Rational(6), Rational(3)});
  int x = lp.add_column(Rational(3), {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}});
  int y = lp.add_column(Rational(2), {{0, Rational(1)}, {1, Rational(3)}});
  REQUIRE(lp.solve() == ExactLp::Status::kOptimal);
  CHECK(lp.objective() == 11);
  CHECK(lp.value(x) == 3);
  CHECK(lp.value(y) == 1);
  auto pi = lp.duals();
  // Strong duality: b . pi equals the objective.
  CHECK(4 * pi[0] + 6 * pi[1] + 3 * pi[2] == 11);
}

TEST_CASE("ExactLp resumes after adding a column") {
  ExactLp lp({Rational(1), Rational(1)});
  lp.add_column(Rational(1), {{0, Rational(1)}});
  REQUIRE(lp.solve() == ExactLp::Status::kOptimal);
  CHECK(lp.objective() == 1);
  lp.add_column(Rational(1), {{1, Rational(1)}});
  REQUIRE(lp.solve() == ExactLp::Status::kOptimal);
  CHECK(lp.objective() == 2);
}

TEST_CASE("ExactLp detects unboundedness") {
  ExactLp lp({Rational(1)});
  lp.add_column(Rational(1), {{0, Rational(-1)}});
  CHECK(lp.solve() == ExactLp::Status::kUnbounded);
}

TEST_CASE("ExactLp handles a degenerate start") {
  // Zero right-hand side rows make the first pivots degenerate.
  ExactLp lp({Rational(0), Rational(0), Rational(2)});
  lp.add_column(Rational(1), {{0, Rational(1)}, {2, Rational(1)}});
  lp.add_column(Rational(1), {{1, Rational(1)}, {2, Rational(1)}});
  lp.add_column(Rational(1), {{0, Rational(-1)}, {1, Rational(-1)}, {2, Rational(1)}});
  REQUIRE(lp.solve() == ExactLp::Status::kOptimal);
  CHECK(lp.objective() == 2);
}
