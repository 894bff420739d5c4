#include "kcut/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kcut/detail/union_find.hpp"

namespace kcut {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  incident_.resize(static_cast<std::size_t>(n));
  detail::UnionFind uf(n);
  int merges = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
    if (e.capacity < 0) throw std::invalid_argument("edge " + std::to_string(i) + " has negative capacity");
    incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<EdgeId>(i));
    incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<EdgeId>(i));
    if (uf.unite(e.u, e.v)) ++merges;
  }
  component_count_ = n - merges;
}

Rational Graph::total_capacity() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.capacity;
  return total;
}

std::vector<Rational> Graph::capacities() const {
  std::vector<Rational> caps;
  caps.reserve(edges_.size());
  for (const auto& e : edges_) caps.push_back(e.capacity);
  return caps;
}

Graph Graph::with_capacities(std::span<const Rational> caps) const {
  if (caps.size() != edges_.size()) throw std::invalid_argument("capacity vector size mismatch");
  auto edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].capacity = caps[i];
  return Graph(n_, std::move(edges));
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_count(const std::string& tok, int line, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + " out of range '" + tok + "'");
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "kcut") throw ParseError(line_no, "malformed header, expected 'p kcut <n> <m>'");
      n = parse_count(toks[2], line_no, "vertex count");
      m = parse_count(toks[3], line_no, "edge count");
      edges.reserve(static_cast<std::size_t>(m));
    } else if (toks[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before header");
      if (toks.size() != 4) throw ParseError(line_no, "malformed edge, expected 'e <u> <v> <cap>'");
      int u = parse_count(toks[1], line_no, "vertex id");
      int v = parse_count(toks[2], line_no, "vertex id");
      if (u < 1 || u > n) throw ParseError(line_no, "vertex id " + toks[1] + " out of range");
      if (v < 1 || v > n) throw ParseError(line_no, "vertex id " + toks[2] + " out of range");
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + toks[1]);
      Rational cap;
      try {
        cap = parse_rational(toks[3]);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
      }
      if (cap < 0) throw ParseError(line_no, "negative capacity " + toks[3]);
      if (static_cast<int>(edges.size()) == m) throw ParseError(line_no, "more edges than declared (" + std::to_string(m) + ")");
      edges.push_back(Edge{u - 1, v - 1, cap});
    } else {
      throw ParseError(line_no, "unknown record '" + toks[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_no, "edge count mismatch: header declares " + std::to_string(m) + ", found " +
                                  std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p kcut " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ';
    if (e.capacity.get_den() == 1) {
      out << e.capacity.get_num().get_str();
    } else {
      out << to_string(e.capacity);
    }
    out << '\n';
  }
  return out.str();
}

Contraction contract(const Graph& g, std::span<const EdgeId> edge_set) {
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId e : edge_set) uf.unite(g.edge(e).u, g.edge(e).v);
  auto labels = uf.labels();
  return contract_partition(g, VertexPartition::from_labels(labels));
}

Contraction contract_partition(const Graph& g, const VertexPartition& p) {
  Contraction out;
  out.vertex_map = p.labels();
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    int a = p.part_of(edge.u);
    int b = p.part_of(edge.v);
    if (a == b) continue;
    edges.push_back(Edge{a, b, edge.capacity});
    out.edge_origin.push_back(e);
  }
  out.graph = Graph(p.part_count(), std::move(edges));
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  Subgraph out;
  out.vertex_origin.assign(vertices.begin(), vertices.end());
  std::sort(out.vertex_origin.begin(), out.vertex_origin.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.vertex_origin.size(); ++i) {
    local[static_cast<std::size_t>(out.vertex_origin[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    int a = local[static_cast<std::size_t>(edge.u)];
    int b = local[static_cast<std::size_t>(edge.v)];
    if (a < 0 || b < 0) continue;
    edges.push_back(Edge{a, b, edge.capacity});
    out.edge_origin.push_back(e);
  }
  out.graph = Graph(static_cast<int>(out.vertex_origin.size()), std::move(edges));
  return out;
}

Subgraph positive_part(const Graph& g) {
  Subgraph out;
  out.vertex_origin.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) out.vertex_origin[static_cast<std::size_t>(v)] = v;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).capacity > 0) {
      edges.push_back(g.edge(e));
      out.edge_origin.push_back(e);
    }
  }
  out.graph = Graph(g.vertex_count(), std::move(edges));
  return out;
}

Graph normalize(const Graph& g) {
  std::map<std::pair<int, int>, Rational> merged;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    merged[{key.first, key.second}] += e.capacity;
  }
  std::vector<Edge> edges;
  for (auto& [key, cap] : merged) edges.push_back(Edge{key.first, key.second, cap});
  return Graph(g.vertex_count(), std::move(edges));
}

VertexPartition components(const Graph& g) {
  return components_of(g, std::vector<bool>(static_cast<std::size_t>(g.edge_count()), true));
}

VertexPartition components_without(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<bool> keep(static_cast<std::size_t>(g.edge_count()), true);
  for (EdgeId e : removed) keep[static_cast<std::size_t>(e)] = false;
  return components_of(g, keep);
}

VertexPartition components_of(const Graph& g, const std::vector<bool>& keep) {
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (keep[static_cast<std::size_t>(e)]) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  auto labels = uf.labels();
  return VertexPartition::from_labels(labels);
}

Rational crossing_value(const Graph& g, const VertexPartition& p) {
  Rational total = 0;
  for (const auto& e : g.edges()) {
    if (p.part_of(e.u) != p.part_of(e.v)) total += e.capacity;
  }
  return total;
}

CutResult cut_of_partition(const Graph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.vertex_count()) throw std::invalid_argument("partition size does not match graph");
  return CutResult{p, crossing_value(g, p)};
}

std::vector<EdgeId> crossing_edges(const Graph& g, const VertexPartition& p) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.part_of(g.edge(e).u) != p.part_of(g.edge(e).v)) out.push_back(e);
  }
  return out;
}

Rational boundary_value(const Graph& g, const std::vector<bool>& in_set) {
  Rational total = 0;
  for (const auto& e : g.edges()) {
    if (in_set[static_cast<std::size_t>(e.u)] != in_set[static_cast<std::size_t>(e.v)]) total += e.capacity;
  }
  return total;
}

bool cut_less(const CutResult& a, const CutResult& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.partition.part_count() != b.partition.part_count()) {
    return a.partition.part_count() > b.partition.part_count();
  }
  return a.partition < b.partition;
}

}  // namespace kcut
