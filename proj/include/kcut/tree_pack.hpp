#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Maximal spanning forest minimizing total weight (Kruskal). Equal weights
/// are taken in ascending edge id. Returned edge ids are sorted.
std::vector<EdgeId> min_spanning_forest(const Graph& g, std::span<const Rational> weights);
std::vector<EdgeId> min_spanning_forest(const Graph& g, std::span<const double> weights);

/// True when `edges` is acyclic with exactly n - h edges.
bool is_maximal_forest(const Graph& g, std::span<const EdgeId> edges);

struct PackedTree {
  std::vector<EdgeId> edges;  // sorted
  Rational weight;
};

struct TreePacking {
  std::vector<PackedTree> trees;
  std::vector<Rational> capacities;  // the capacities packed against
  std::vector<Rational> loads;       // per edge: sum of weights of trees using it
  Rational total_value;
  bool exact = true;        // false for multiplicative-weights packings
  double approx_value = 0;  // floating view of total_value
  long iterations = 0;
};

enum class TieBreak { kLowestEdgeId };

struct PackConfig {
  double epsilon = 0.1;
  TieBreak tie_break = TieBreak::kLowestEdgeId;
  long max_iterations = 20'000'000;
};

class IterationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> compute_loads(int edge_count, std::span<const PackedTree> trees);

/// Multiplicative-weights packing with value at least (1 - epsilon) times
/// the optimum. Every capacity must be positive. Weights are exact: the
/// packing is rescaled by its maximum relative overload, so loads <= caps.
TreePacking mwu_pack(const Graph& g, std::span<const Rational> caps, const PackConfig& cfg);

/// Optimal packing by column generation: an exact restricted master over
/// the forests generated so far, priced by a minimum spanning forest under
/// the master duals. The result is a basic optimum (at most m trees).
TreePacking exact_pack(const Graph& g, std::span<const Rational> caps);

/// Optimal packing that loads every edge to capacity. Only exists when the
/// graph is strength-tight (c(E) = sigma (n - h)), e.g. a component
/// contracted by its minimum-strength partition. Throws SaturationError
/// otherwise.
TreePacking saturating_pack(const Graph& g, std::span<const Rational> caps);

}  // namespace kcut
