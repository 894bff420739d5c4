#pragma once

#include <span>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Directed network with exact capacities, solved by shortest augmenting
/// paths (Edmonds-Karp).
class FlowNetwork {
 public:
  explicit FlowNetwork(int n);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  void add_arc(int from, int to, const Rational& capacity);
  /// Undirected edge: capacity available in both directions.
  void add_undirected(int a, int b, const Rational& capacity);

  Rational max_flow(int source, int sink);
  /// Nodes reachable from the source in the residual network after
  /// max_flow; this is the minimal source side of a minimum cut.
  std::vector<bool> source_side(int source) const;
  /// Nodes that can still reach the sink in the residual network; the
  /// complement is the maximal source side of a minimum cut.
  std::vector<bool> sink_side(int sink) const;

 private:
  struct Arc {
    int to;
    int reverse;  // index of the paired arc in adjacency_[to]
    Rational residual;
  };
  std::vector<std::vector<Arc>> adjacency_;
};

struct FlowResult {
  Rational value;
  std::vector<VertexId> source_side;  // sorted
};

/// Exact s-t max flow on an undirected capacitated graph; source_side is the
/// residual-reachable set from s.
FlowResult max_flow_min_cut(const Graph& g, std::span<const Rational> caps, VertexId s, VertexId t);
FlowResult max_flow_min_cut(const Graph& g, VertexId s, VertexId t);

}  // namespace kcut
