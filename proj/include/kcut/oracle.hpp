#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kcut/graph.hpp"

/// Exhaustive ground truth for small graphs. Everything here is exponential
/// and refuses inputs beyond OracleLimits instead of degrading.
namespace kcut::oracle {

struct OracleLimits {
  int max_n_partitions = 12;
  long max_spanning_trees = 20000;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calls `visit(labels, part_count)` once per set partition of {0..n-1};
/// labels form a restricted-growth string.
void for_each_partition(int n, const std::function<void(std::span<const int>, int)>& visit);

std::vector<VertexPartition> enum_partitions(const Graph& g, const OracleLimits& limits = {});

struct StrengthResult {
  Rational sigma;
  VertexPartition argmin;
};

/// min over |P| >= 2 of c(E(P)) / (|P| - 1); ties go to more parts, then
/// canonical order.
StrengthResult oracle_strength(const Graph& g, const OracleLimits& limits = {});

struct MinKCutResult {
  CutResult best;
  std::vector<VertexPartition> minimizers;  // canonical order
};

MinKCutResult oracle_min_kcut(const Graph& g, int k, const OracleLimits& limits = {});

/// Every partition with at least k parts and c(E(P)) <= bound, sorted by
/// cut_less.
std::vector<CutResult> oracle_cuts_within(const Graph& g, int k, const Rational& bound,
                                          const OracleLimits& limits = {});

struct AttackResult {
  Rational value;
  VertexPartition coarsest;  // fewest parts among minimizers
  VertexPartition finest;    // most parts among minimizers
};

/// min over partitions of c(E(P)) - b (|P| - 1).
AttackResult oracle_attack(const Graph& g, const Rational& b, const OracleLimits& limits = {});

/// All maximal forests (n - h edges each) as sorted edge-id lists.
std::vector<std::vector<EdgeId>> enumerate_maximal_forests(const Graph& g, const OracleLimits& limits = {});

/// Optimum of the fractional spanning-tree packing LP, solved exactly over
/// the enumerated forests.
Rational oracle_treepack(const Graph& g, const OracleLimits& limits = {});
Rational oracle_treepack(const Graph& g, std::span<const Rational> caps, const OracleLimits& limits = {});

/// Optimum of the k-cut LP (one covering constraint with right-hand side
/// k - h per maximal forest, 0 <= x <= 1), solved exactly via its dual.
Rational oracle_lp_value(const Graph& g, int k, const OracleLimits& limits = {});

}  // namespace kcut::oracle
