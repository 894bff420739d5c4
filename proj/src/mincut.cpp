#include "kcut/mincut.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcut {

namespace {

using Pair = std::pair<VertexId, VertexId>;

// The side holding S_u xor S_v (just S_u when u == v).
std::vector<int> side_labels(const TreeCutTable& t, VertexId u, VertexId v) {
  const auto n = t.parent.size();
  std::vector<int> labels(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool in_u = t.in_subtree(static_cast<VertexId>(x), u);
    bool in_v = u != v && t.in_subtree(static_cast<VertexId>(x), v);
    labels[x] = in_u != in_v ? 1 : 0;
  }
  return labels;
}

CutResult best_of(const Graph& g, const TreeCutTable& t, bool pairs) {
  const auto n = static_cast<VertexId>(t.parent.size());
  Rational best;
  std::vector<Pair> ties;
  auto offer = [&](VertexId u, VertexId v) {
    Rational value = t.pair_value(u, v);
    if (ties.empty() || value < best) {
      best = value;
      ties.clear();
    }
    if (value == best) ties.emplace_back(u, v);
  };
  for (VertexId u = 1; u < n; ++u) {
    offer(u, u);
    if (!pairs) continue;
    for (VertexId v = u + 1; v < n; ++v) offer(u, v);
  }
  if (ties.empty()) throw std::invalid_argument("graph has a single vertex");
  CutResult out;
  bool first = true;
  for (auto [u, v] : ties) {
    auto cut = cut_of_partition(g, VertexPartition::from_labels(side_labels(t, u, v)));
    if (cut.value != best) throw std::logic_error("tree cut table disagrees with direct evaluation");
    if (first || cut_less(cut, out)) out = std::move(cut);
    first = false;
  }
  return out;
}

}  // namespace

Rational TreeCutTable::pair_value(VertexId u, VertexId v) const {
  const auto su = static_cast<std::size_t>(u);
  const auto sv = static_cast<std::size_t>(v);
  if (u == v) return cut[su];
  if (is_ancestor(u, v)) return cut[su] + cut[sv] - 2 * (degree[sv] - cross[sv][su]);
  if (is_ancestor(v, u)) return cut[su] + cut[sv] - 2 * (degree[su] - cross[su][sv]);
  return cut[su] + cut[sv] - 2 * cross[su][sv];
}

TreeCutTable build_tree_cut_table(const Graph& g, std::span<const EdgeId> tree) {
  const int n = g.vertex_count();
  if (n < 1 || static_cast<int>(tree.size()) != n - 1 || !is_maximal_forest(g, tree)) {
    throw std::invalid_argument("not a spanning tree of the graph");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(un);
  for (EdgeId e : tree) {
    const auto& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
    adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
  }
  TreeCutTable t;
  t.parent.assign(un, -1);
  t.parent_edge.assign(un, -1);
  t.enter.assign(un, 0);
  t.leave.assign(un, 0);

  // Iterative DFS from vertex 0; `order` is the preorder.
  std::vector<VertexId> order;
  std::vector<std::pair<VertexId, std::size_t>> stack{{0, 0}};
  std::vector<bool> seen(un, false);
  seen[0] = true;
  int clock = 0;
  t.enter[0] = clock++;
  order.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nbrs = adj[static_cast<std::size_t>(v)];
    if (next == nbrs.size()) {
      t.leave[static_cast<std::size_t>(v)] = clock;
      stack.pop_back();
      continue;
    }
    auto [w, e] = nbrs[next++];
    if (seen[static_cast<std::size_t>(w)]) continue;
    seen[static_cast<std::size_t>(w)] = true;
    t.parent[static_cast<std::size_t>(w)] = v;
    t.parent_edge[static_cast<std::size_t>(w)] = e;
    t.enter[static_cast<std::size_t>(w)] = clock++;
    order.push_back(w);
    stack.emplace_back(w, 0);
  }

  std::vector<std::vector<Rational>> weight(un, std::vector<Rational>(un, Rational(0)));
  for (const auto& e : g.edges()) {
    weight[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.capacity;
    weight[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.capacity;
  }
  // below[u][y] = sum over x in S_u of w(x, y), built children first.
  std::vector<std::vector<Rational>> below = weight;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId p = t.parent[static_cast<std::size_t>(*it)];
    if (p < 0) continue;
    auto& dst = below[static_cast<std::size_t>(p)];
    const auto& src = below[static_cast<std::size_t>(*it)];
    for (std::size_t y = 0; y < un; ++y) dst[y] += src[y];
  }
  // cross[u][v] = sum over y in S_v of below[u][y], same recursion in v.
  t.cross = below;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    VertexId p = t.parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    for (std::size_t u = 0; u < un; ++u) t.cross[u][static_cast<std::size_t>(p)] += t.cross[u][static_cast<std::size_t>(v)];
  }
  t.cut.assign(un, Rational(0));
  t.degree.assign(un, Rational(0));
  for (std::size_t v = 0; v < un; ++v) {
    t.degree[v] = t.cross[v][0];
    t.cut[v] = t.degree[v] - t.cross[v][v];
  }
  return t;
}

CutResult min_1respect(const Graph& g, std::span<const EdgeId> tree) {
  return best_of(g, build_tree_cut_table(g, tree), false);
}

CutResult min_2respect(const Graph& g, std::span<const EdgeId> tree) {
  return best_of(g, build_tree_cut_table(g, tree), true);
}

MincutResult global_mincut(const Graph& g, double epsilon) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("global_mincut needs at least two vertices");
  if (!(epsilon > 0 && epsilon < 1.0 / 3)) throw std::invalid_argument("epsilon must lie in (0, 1/3)");
  MincutResult out;
  auto sub = positive_part(g);
  auto comps = components(sub.graph);
  if (comps.part_count() > 1) {
    std::vector<int> labels(static_cast<std::size_t>(n), 1);
    for (VertexId v : comps.parts().front()) labels[static_cast<std::size_t>(v)] = 0;
    out.cut = cut_of_partition(g, VertexPartition::from_labels(labels));
    out.crossing = crossing_edges(g, out.cut.partition);
    return out;
  }
  PackConfig cfg;
  cfg.epsilon = epsilon;
  auto local = mwu_pack(sub.graph, sub.graph.capacities(), cfg);
  for (const auto& t : local.trees) {
    PackedTree mapped{{}, t.weight};
    for (EdgeId e : t.edges) mapped.edges.push_back(sub.edge_origin[static_cast<std::size_t>(e)]);
    std::sort(mapped.edges.begin(), mapped.edges.end());
    out.packing.trees.push_back(std::move(mapped));
  }
  out.packing.capacities = g.capacities();
  out.packing.loads = compute_loads(g.edge_count(), out.packing.trees);
  out.packing.total_value = local.total_value;
  out.packing.exact = false;
  out.packing.approx_value = local.approx_value;
  out.packing.iterations = local.iterations;

  for (std::size_t i = 0; i < out.packing.trees.size(); ++i) {
    auto cut = min_2respect(g, out.packing.trees[i].edges);
    if (out.witness_tree < 0 || cut_less(cut, out.cut)) {
      out.cut = std::move(cut);
      out.witness_tree = static_cast<int>(i);
    }
  }
  out.crossing = crossing_edges(g, out.cut.partition);
  return out;
}

}  // namespace kcut
