#include "kcut/max_flow.hpp"

#include <queue>
#include <stdexcept>

namespace kcut {

FlowNetwork::FlowNetwork(int n) : adjacency_(static_cast<std::size_t>(n)) {}

void FlowNetwork::add_arc(int from, int to, const Rational& capacity) {
  if (from == to) throw std::invalid_argument("flow arc must join distinct nodes");
  auto& out = adjacency_[static_cast<std::size_t>(from)];
  auto& in = adjacency_[static_cast<std::size_t>(to)];
  out.push_back(Arc{to, static_cast<int>(in.size()), capacity});
  in.push_back(Arc{from, static_cast<int>(out.size()) - 1, Rational(0)});
}

void FlowNetwork::add_undirected(int a, int b, const Rational& capacity) {
  auto& out = adjacency_[static_cast<std::size_t>(a)];
  auto& in = adjacency_[static_cast<std::size_t>(b)];
  out.push_back(Arc{b, static_cast<int>(in.size()), capacity});
  in.push_back(Arc{a, static_cast<int>(out.size()) - 1, capacity});
}

Rational FlowNetwork::max_flow(int source, int sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  const auto n = adjacency_.size();
  Rational total = 0;
  std::vector<std::pair<int, int>> parent(n);  // (node, arc index)
  while (true) {
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty() && !seen[static_cast<std::size_t>(sink)]) {
      int u = queue.front();
      queue.pop();
      const auto& arcs = adjacency_[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        if (seen[static_cast<std::size_t>(a.to)] || sgn(a.residual) <= 0) continue;
        seen[static_cast<std::size_t>(a.to)] = true;
        parent[static_cast<std::size_t>(a.to)] = {u, static_cast<int>(i)};
        queue.push(a.to);
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return total;
    Rational bottleneck;
    bool first = true;
    for (int v = sink; v != source;) {
      auto [u, i] = parent[static_cast<std::size_t>(v)];
      const auto& r = adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)].residual;
      if (first || r < bottleneck) bottleneck = r;
      first = false;
      v = u;
    }
    for (int v = sink; v != source;) {
      auto [u, i] = parent[static_cast<std::size_t>(v)];
      auto& arc = adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      arc.residual -= bottleneck;
      adjacency_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.reverse)].residual += bottleneck;
      v = u;
    }
    total += bottleneck;
  }
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::queue<int> queue;
  queue.push(source);
  seen[static_cast<std::size_t>(source)] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (const auto& a : adjacency_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(a.to)] && sgn(a.residual) > 0) {
        seen[static_cast<std::size_t>(a.to)] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

std::vector<bool> FlowNetwork::sink_side(int sink) const {
  // v reaches the sink iff the arc v->w has residual and w reaches the sink;
  // walk reverse arcs: from w look at arcs w->v and check residual of v->w.
  std::vector<bool> seen(adjacency_.size(), false);
  std::queue<int> queue;
  queue.push(sink);
  seen[static_cast<std::size_t>(sink)] = true;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop();
    for (const auto& a : adjacency_[static_cast<std::size_t>(w)]) {
      const auto& back = adjacency_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.reverse)];
      if (!seen[static_cast<std::size_t>(a.to)] && sgn(back.residual) > 0) {
        seen[static_cast<std::size_t>(a.to)] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

FlowResult max_flow_min_cut(const Graph& g, std::span<const Rational> caps, VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("max_flow_min_cut needs s != t");
  FlowNetwork net(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    net.add_undirected(g.edge(e).u, g.edge(e).v, caps[static_cast<std::size_t>(e)]);
  }
  FlowResult result;
  result.value = net.max_flow(s, t);
  auto side = net.source_side(s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (side[static_cast<std::size_t>(v)]) result.source_side.push_back(v);
  }
  return result;
}

FlowResult max_flow_min_cut(const Graph& g, VertexId s, VertexId t) {
  auto caps = g.capacities();
  return max_flow_min_cut(g, caps, s, t);
}

}  // namespace kcut
