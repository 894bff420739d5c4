#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/kcut_lp.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"

namespace kcut {

/// Calls `emit(labels, parts)` for every partition obtained by deleting at
/// most h edges F of `tree` and grouping the components of tree - F into
/// at least `min_parts` groups. `labels` is the canonical restricted-growth
/// labelling, so equal partitions produce equal label strings. The same
/// partition can be emitted several times.
void for_each_tree_cut(const Graph& g, std::span<const EdgeId> tree, int h, int min_parts,
                       const std::function<void(std::span<const int> labels, int parts)>& emit);

/// Materialized form of for_each_tree_cut with values (not deduplicated).
std::vector<CutResult> cuts_from_tree(const Graph& g, std::span<const EdgeId> tree, int h, int k);

enum class SolveMode { kExact, kApprox };

struct SolveOptions {
  SolveMode mode = SolveMode::kExact;
  double epsilon = 0;  // approx mode; 0 selects 1/(2k)
};

struct EnumerationReport {
  int k = 0;
  int h = 0;
  SolveMode mode = SolveMode::kExact;
  double epsilon = 0;
  long candidates = 0;  // partitions emitted before deduplication
  int trees = 0;        // support trees scanned
  bool complete = true;
  Rational threshold;            // largest value kept
  std::vector<CutResult> cuts;   // distinct, sorted by cut_less
};

struct KCutSolution {
  CutResult best;
  std::vector<CutResult> minimizers;  // every optimal partition, sorted
  EnumerationReport report;
  TreePacking packing;  // the dual packing whose trees were scanned
  std::vector<Rational> z;
};

/// Exact mode packs c + z exactly and scans h = 2k - 3 removals; approx
/// mode uses multiplicative weights with epsilon < 1/(2k - 1) and h = 2k - 2.
KCutSolution min_kcut(const Graph& g, int k, const SolveOptions& options = {});

/// Every distinct partition with at least k parts and value at most
/// alpha * lambda_k, from the exact dual packing with h = floor(2 alpha (k-1)).
EnumerationReport enumerate_approx_kcuts(const Graph& g, int k, const Rational& alpha);

/// Packing of c + z (z from the closed-form dual for k) whose trees the
/// solvers scan.
TreePacking dual_packing(const Graph& g, const PrincipalSequence& psp, int k, const SolveOptions& options);

struct RespectStats {
  int h = 0;
  std::vector<EdgeId> cut_edges;
  std::vector<int> crossings;  // per packed tree: |E(T) cap cut|
  int min_crossing = 0;
  Rational q;                  // weight fraction of trees with crossings <= h
  std::optional<Rational> bound;
};

RespectStats respect_stats(const TreePacking& packing, std::span<const EdgeId> cut_edges, int h);
/// Also attaches respect_lower_bound(alpha, k, h, n).
RespectStats respect_stats(const TreePacking& packing, std::span<const EdgeId> cut_edges, int h,
                           const Rational& alpha, int k, int n);

/// 1 - 2 alpha (k - 1)(1 - 1/n) / (h + 1): lower bound on the fraction of an
/// optimal dual packing that h-respects a k-cut of value <= alpha lambda_k.
Rational respect_lower_bound(const Rational& alpha, int k, int h, int n);

/// ((h + 1)(1 - eps) - 2 alpha (1 - 1/n)) / h: the same for a
/// (1 - eps)-optimal packing of G itself and a cut of value <= alpha lambda.
Rational packing_respect_lower_bound(const Rational& alpha, int h, int n, const Rational& eps);

/// Bell(h + 1) * n^h / q: at most this many cuts are h-respected by a
/// packing in which each of them is h-respected by a q fraction.
Rational cut_count_ceiling(int h, int n, const Rational& q);

struct RoundResult {
  CutResult cut;
  bool certified = false;  // x was verified optimal, so the 2(1 - 1/n) bound applies
  int residual_components = 0;
  std::vector<VertexId> isolated;  // representative original vertex per isolated residual vertex
  std::string note;
};

/// Contracts x = 0 edges, removes x = 1 edges and isolates the k - h
/// smallest residual degrees.
RoundResult round_lp(const Graph& g, const PrimalSolution& x);

/// Keeps P_{j-1} and splits off the k - |P_{j-1}| cheapest shores of the
/// minimum-strength partitions refined at level j.
CutResult ravi_sinha_cut(const Graph& g, const PrincipalSequence& psp, int k);

}  // namespace kcut
