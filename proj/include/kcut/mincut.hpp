#pragma once

#include <span>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/tree_pack.hpp"

namespace kcut {

/// A spanning tree rooted at vertex 0, with every subtree cut and every
/// pairwise cross term precomputed. Vertex v != root stands for the tree
/// edge to its parent and for the subtree S_v below it.
struct TreeCutTable {
  std::vector<VertexId> parent;    // -1 at the root
  std::vector<EdgeId> parent_edge;  // -1 at the root
  std::vector<int> enter, leave;    // DFS interval: u is an ancestor of v iff enter[u] <= enter[v] < leave[u]
  std::vector<Rational> cut;        // c(delta(S_v))
  std::vector<Rational> degree;     // sum of c(delta(x)) over x in S_v
  /// cross[u][v] = sum over x in S_u, y in S_v of w(x, y), ordered pairs.
  std::vector<std::vector<Rational>> cross;

  bool is_ancestor(VertexId u, VertexId v) const {
    return enter[static_cast<std::size_t>(u)] <= enter[static_cast<std::size_t>(v)] &&
           enter[static_cast<std::size_t>(v)] < leave[static_cast<std::size_t>(u)];
  }
  bool in_subtree(VertexId x, VertexId v) const { return is_ancestor(v, x); }
  /// Value of the 2-way cut whose tree crossings are exactly the edges
  /// above u and v (u == v: just one edge).
  Rational pair_value(VertexId u, VertexId v) const;
};

/// Throws std::invalid_argument unless `tree` is a spanning tree of g.
TreeCutTable build_tree_cut_table(const Graph& g, std::span<const EdgeId> tree);

/// Cheapest cut crossing the tree exactly once.
CutResult min_1respect(const Graph& g, std::span<const EdgeId> tree);
/// Cheapest cut crossing the tree once or twice.
CutResult min_2respect(const Graph& g, std::span<const EdgeId> tree);

struct MincutResult {
  CutResult cut;
  int witness_tree = -1;  // index into packing.trees, -1 for a zero cut
  std::vector<EdgeId> crossing;
  TreePacking packing;
};

/// Packs trees with multiplicative weights and scans every tree of the
/// packing with min_2respect.
MincutResult global_mincut(const Graph& g, double epsilon = 1.0 / 6);

}  // namespace kcut
