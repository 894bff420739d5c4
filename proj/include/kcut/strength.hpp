#pragma once

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Minimizers of the attack function g(b) = min_P c(E(P)) - b (|P| - 1).
/// The minimizing partitions at a fixed b form a lattice; `coarsest` and
/// `finest` are its bottom and top.
struct AttackResult {
  Rational b;
  Rational value;
  VertexPartition coarsest;
  VertexPartition finest;
};

/// Exact attack evaluation by Dilworth truncation: vertices are inserted in
/// ascending id order and each insertion decides, with one min s-t cut, which
/// current blocks merge with the new vertex. The extreme minimizers come
/// from re-running at b -/+ eps with eps below the gap to any other
/// breakpoint.
AttackResult attack(const Graph& g, const Rational& b);

/// A single optimal partition at b together with g(b).
std::pair<Rational, VertexPartition> attack_any(const Graph& g, const Rational& b);

struct Breakpoint {
  Rational b;
  VertexPartition before;  // coarsest minimizer at b
  VertexPartition after;   // finest minimizer at b
};

/// All breakpoints of g in ascending order, found by intersecting the
/// optimal lines of bracketing values and recursing.
std::vector<Breakpoint> breakpoints(const Graph& g);

struct StrengthResult {
  Rational sigma;
  VertexPartition partition;  // finest minimum-strength partition
};

/// sigma(G) = min over |P| >= 2 of c(E(P)) / (|P| - 1). Newton iteration on
/// the attack function; needs n >= 2.
StrengthResult strength(const Graph& g);

struct PspLevel {
  Rational lambda;
  VertexPartition partition;                        // P_i
  std::vector<EdgeId> cumulative;                   // A_i = E(P_i), sorted
  std::vector<EdgeId> increment;                    // B_i = A_i \ A_{i-1}, sorted
  std::vector<std::vector<VertexId>> split_components;  // parts of P_{i-1} refined here
  int kappa = 0;                                    // |P_i|
  Rational cut_value;                               // c(A_i)
};

struct PrincipalSequence {
  VertexPartition base;  // P_0: connected components
  std::vector<PspLevel> levels;

  int level_count() const { return static_cast<int>(levels.size()); }
  /// |P_i| for 0 <= i <= level_count().
  int kappa(int i) const { return i == 0 ? base.part_count() : levels[static_cast<std::size_t>(i - 1)].kappa; }
  const VertexPartition& partition(int i) const {
    return i == 0 ? base : levels[static_cast<std::size_t>(i - 1)].partition;
  }
  Rational cut_value(int i) const { return i == 0 ? Rational(0) : levels[static_cast<std::size_t>(i - 1)].cut_value; }
  const Rational& lambda(int i) const { return levels[static_cast<std::size_t>(i - 1)].lambda; }
  /// Level i >= 1 with e in B_i.
  std::vector<int> edge_levels(int edge_count) const;
  /// Smallest j with kappa(j) >= k.
  int level_for(int k) const;
};

/// Recursive decomposition: repeatedly split every minimum-strength
/// component of G - A_i by its finest minimum-strength partition.
PrincipalSequence principal_sequence(const Graph& g);

/// The same sequence read off the breakpoints of g (finest minimizer at each
/// breakpoint). Used as an independent cross-check.
PrincipalSequence sequence_from_breakpoints(const Graph& g);

}  // namespace kcut
