#pragma once

#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcut/partition.hpp"
#include "kcut/rational.hpp"

namespace kcut {

using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational capacity;
};

/// Undirected multigraph with exact capacities. Vertices are 0..n-1 and edge
/// ids follow insertion order. Parallel edges are kept; self-loops are not
/// representable. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on an out-of-range endpoint, a self-loop
  /// or a negative capacity.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  /// Edge ids incident to v.
  std::span<const EdgeId> incident(VertexId v) const { return incident_[static_cast<std::size_t>(v)]; }

  /// Number of connected components of (V, E).
  int component_count() const { return component_count_; }
  Rational total_capacity() const;
  std::vector<Rational> capacities() const;

  /// Same topology, new capacities (one per edge, all >= 0).
  Graph with_capacities(std::span<const Rational> caps) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  int component_count_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the `p kcut <n> <m>` / `e <u> <v> <cap>` text format. Vertex ids in
/// the file are 1-based and are shifted to 0-based.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string format_graph(const Graph& g);

struct Contraction {
  Graph graph;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_origin;   // new edge -> old edge
};

/// Merges the endpoints of every listed edge. Edges that become loops are
/// dropped, parallel edges survive. New vertex ids follow the canonical
/// order of the merged groups (by minimum old id).
Contraction contract(const Graph& g, std::span<const EdgeId> edge_set);
/// Merges each part of `p` into one vertex (new id = canonical part index).
Contraction contract_partition(const Graph& g, const VertexPartition& p);

struct Subgraph {
  Graph graph;
  std::vector<VertexId> vertex_origin;  // new vertex -> old vertex
  std::vector<EdgeId> edge_origin;      // new edge -> old edge
};

/// Induced subgraph on `vertices` (any order; new ids follow sorted order).
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);
/// Drops zero-capacity edges, keeping the vertex set.
Subgraph positive_part(const Graph& g);
/// Merges parallel edges by summing capacities.
Graph normalize(const Graph& g);

VertexPartition components(const Graph& g);
/// Components after deleting the listed edges.
VertexPartition components_without(const Graph& g, std::span<const EdgeId> removed);
/// Components using only edges with keep[e] == true.
VertexPartition components_of(const Graph& g, const std::vector<bool>& keep);

struct CutResult {
  VertexPartition partition;
  Rational value;
  int k_achieved() const { return partition.part_count(); }
};

/// c(E(P)): total capacity of edges whose endpoints lie in different parts.
CutResult cut_of_partition(const Graph& g, const VertexPartition& p);
Rational crossing_value(const Graph& g, const VertexPartition& p);
std::vector<EdgeId> crossing_edges(const Graph& g, const VertexPartition& p);
/// c(delta(S)) for a vertex set given as a membership mask.
Rational boundary_value(const Graph& g, const std::vector<bool>& in_set);

/// Preference order used for every reported cut: smaller value, then more
/// parts, then canonical partition order.
bool cut_less(const CutResult& a, const CutResult& b);

}  // namespace kcut
