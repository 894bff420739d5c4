#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"

namespace kcut {

// The k-cut LP over maximal forests F of G (h = number of components):
//
//   min  sum_e c_e x_e   s.t.  x(F) >= k - h for every F,  0 <= x <= 1
//
// and its dual
//
//   max  (k - h) sum_T y_T - sum_e z_e   s.t.  load_y(e) <= c_e + z_e,  y, z >= 0.
//
// Both optima are written down in closed form from the principal sequence.

struct PrimalSolution {
  int k = 0;
  int level = 0;  // j: smallest index with kappa_j >= k (0 when k <= h)
  Rational alpha;
  std::vector<Rational> x;
  Rational objective;
};

/// x = 1 on A_{j-1}, alpha on B_j, 0 elsewhere. Needs 2 <= k <= n.
PrimalSolution lp_primal(const Graph& g, const PrincipalSequence& psp, int k);

enum class DualMode {
  kExplicit,  // an actual tree packing in capacities c + z
  kLazy,      // only the per-edge loads of the scaled ideal packing
};

struct DualSolution {
  int k = 0;
  int level = 0;
  Rational lambda;  // lambda_j, the intended value of sum_T y_T (0 when j = 0)
  std::vector<Rational> z;
  DualMode mode = DualMode::kExplicit;
  TreePacking packing;         // explicit mode only
  std::vector<Rational> loads;  // per edge; analytic in lazy mode
  Rational tree_total;          // sum_T y_T
  Rational objective;
};

DualSolution lp_dual(const Graph& g, const PrincipalSequence& psp, int k, DualMode mode = DualMode::kExplicit);

/// One saturating packing of the component `component` of P_{level-1},
/// contracted by the parts of P_level inside it. Trees, capacities and
/// loads are indexed by the edge ids of the whole graph.
struct IdealBlock {
  int level = 0;
  std::vector<VertexId> component;
  std::vector<EdgeId> edges;  // B_level edges inside the component
  Rational scale;             // lambda_level, or 1 for a zero-capacity level
  TreePacking packing;
};

struct IdealPacking {
  std::vector<IdealBlock> blocks;
  /// load(e) / lambda_i for e in B_i: the probability that a tree drawn
  /// from the ideal distribution contains e.
  std::vector<Rational> marginal;
};

IdealPacking ideal_packing(const Graph& g, const PrincipalSequence& psp);

/// Union of one tree per block (choice[b] indexes blocks[b].packing.trees);
/// always a maximal forest of g.
std::vector<EdgeId> combine_trees(const IdealPacking& ideal, std::span<const int> choice);

struct LagrangeanResult {
  Rational value;
  Rational b;  // smallest maximizer
};

/// max over b >= 0 of g(b) + b (k - 1), evaluated on the kinks of the
/// attack function recorded in psp.
LagrangeanResult lagrangean_value(const PrincipalSequence& psp, int k);

struct PrimalVerdict {
  bool feasible = false;
  bool bounds_ok = false;
  Rational required;               // k - h
  Rational forest_weight;          // minimum x(F) over maximal forests
  std::vector<EdgeId> min_forest;  // the forest attaining it (violator when infeasible)
  std::string detail;
};

PrimalVerdict verify_primal(const Graph& g, std::span<const Rational> x, int k);

struct DualVerdict {
  bool feasible = false;
  std::optional<EdgeId> overloaded_edge;
  Rational objective;  // recomputed from the trees and z
  std::string detail;
};

/// Explicit mode: rebuilds loads from the trees. Lazy mode: checks the
/// analytic loads.
DualVerdict verify_dual(const Graph& g, const DualSolution& dual);

struct SlacknessVerdict {
  // [0] z_e > 0 => x_e = 1
  // [1] y_T > 0 => x(T) = k - h
  // [2] x_e > 0 => load(e) = c_e + z_e
  std::array<bool, 3> holds{};
  std::array<std::string, 3> detail;
  bool all() const { return holds[0] && holds[1] && holds[2]; }
};

/// Needs an explicit dual.
SlacknessVerdict check_complementary_slackness(const Graph& g, std::span<const Rational> x, const DualSolution& dual);

}  // namespace kcut
