#include "kcut/tree_pack.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "kcut/detail/union_find.hpp"
#include "kcut/exact_lp.hpp"

namespace kcut {

namespace {

template <typename Weight>
std::vector<EdgeId> kruskal(const Graph& g, std::span<const Weight> weights) {
  if (static_cast<int>(weights.size()) != g.edge_count()) throw std::invalid_argument("weight vector size mismatch");
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)];
  });
  detail::UnionFind uf(g.vertex_count());
  std::vector<EdgeId> forest;
  for (EdgeId e : order) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

void check_caps(const Graph& g, std::span<const Rational> caps) {
  if (static_cast<int>(caps.size()) != g.edge_count()) throw std::invalid_argument("capacity vector size mismatch");
  for (const auto& c : caps) {
    if (c < 0) throw std::invalid_argument("negative capacity");
  }
  if (g.vertex_count() - g.component_count() == 0) {
    throw std::invalid_argument("graph has no edges to pack (forests are empty)");
  }
}

TreePacking finish(std::vector<PackedTree> trees, std::span<const Rational> caps, bool exact) {
  TreePacking p;
  p.trees = std::move(trees);
  p.capacities.assign(caps.begin(), caps.end());
  p.loads = compute_loads(static_cast<int>(caps.size()), p.trees);
  p.total_value = 0;
  for (const auto& t : p.trees) p.total_value += t.weight;
  p.exact = exact;
  p.approx_value = to_double(p.total_value);
  return p;
}

}  // namespace

std::vector<EdgeId> min_spanning_forest(const Graph& g, std::span<const Rational> weights) {
  return kruskal(g, weights);
}

std::vector<EdgeId> min_spanning_forest(const Graph& g, std::span<const double> weights) {
  return kruskal(g, weights);
}

bool is_maximal_forest(const Graph& g, std::span<const EdgeId> edges) {
  if (static_cast<int>(edges.size()) != g.vertex_count() - g.component_count()) return false;
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

std::vector<Rational> compute_loads(int edge_count, std::span<const PackedTree> trees) {
  std::vector<Rational> loads(static_cast<std::size_t>(edge_count), Rational(0));
  for (const auto& t : trees) {
    for (EdgeId e : t.edges) loads[static_cast<std::size_t>(e)] += t.weight;
  }
  return loads;
}

TreePacking mwu_pack(const Graph& g, std::span<const Rational> caps, const PackConfig& cfg) {
  check_caps(g, caps);
  if (!(cfg.epsilon > 0 && cfg.epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  for (const auto& c : caps) {
    if (sgn(c) <= 0) throw std::invalid_argument("mwu_pack needs positive capacities; drop zero edges first");
  }
  const auto m = static_cast<std::size_t>(g.edge_count());
  // The width analysis loses about a factor (1 - eps/2) on top of the
  // stopping rule, so the schedule runs at half the requested epsilon.
  const double eps = cfg.epsilon / 2;
  const double threshold = std::log(static_cast<double>(m)) / eps;

  std::vector<double> log_cap(m);
  std::vector<double> cap_d(m);
  for (std::size_t e = 0; e < m; ++e) {
    cap_d[e] = to_double(caps[e]);
    log_cap[e] = std::log(cap_d[e]);
  }
  std::vector<double> log_weight(m, 0.0);  // weights start at 1
  std::vector<double> key(m);
  std::map<std::vector<EdgeId>, Rational> accumulated;
  std::vector<Rational> raw_load(m, Rational(0));

  long iterations = 0;
  while (true) {
    if (iterations >= cfg.max_iterations) {
      throw IterationLimitExceeded("mwu_pack exceeded " + std::to_string(cfg.max_iterations) + " iterations");
    }
    ++iterations;
    for (std::size_t e = 0; e < m; ++e) key[e] = log_weight[e] - log_cap[e];
    auto tree = min_spanning_forest(g, std::span<const double>(key));
    EdgeId bottleneck = tree.front();
    for (EdgeId e : tree) {
      if (caps[static_cast<std::size_t>(e)] < caps[static_cast<std::size_t>(bottleneck)]) bottleneck = e;
    }
    const Rational& delta = caps[static_cast<std::size_t>(bottleneck)];
    const double delta_d = cap_d[static_cast<std::size_t>(bottleneck)];
    accumulated[tree] += delta;
    bool stop = false;
    for (EdgeId e : tree) {
      auto idx = static_cast<std::size_t>(e);
      raw_load[idx] += delta;
      log_weight[idx] += std::log1p(eps * delta_d / cap_d[idx]);
      if (log_weight[idx] > threshold) stop = true;
    }
    if (stop) break;
  }

  Rational overload = 0;
  for (std::size_t e = 0; e < m; ++e) {
    Rational ratio = raw_load[e] / caps[e];
    if (ratio > overload) overload = ratio;
  }
  std::vector<PackedTree> trees;
  trees.reserve(accumulated.size());
  for (auto& [edges, weight] : accumulated) trees.push_back(PackedTree{edges, weight / overload});
  auto packing = finish(std::move(trees), caps, false);
  packing.iterations = iterations;
  return packing;
}

TreePacking exact_pack(const Graph& g, std::span<const Rational> caps) {
  check_caps(g, caps);
  ExactLp master(std::vector<Rational>(caps.begin(), caps.end()));
  std::set<std::vector<EdgeId>> seen;
  std::vector<std::vector<EdgeId>> columns;

  auto add = [&](std::vector<EdgeId> forest) {
    std::vector<ExactLp::Entry> entries;
    for (EdgeId e : forest) entries.emplace_back(e, Rational(1));
    master.add_column(Rational(1), std::move(entries));
    seen.insert(forest);
    columns.push_back(std::move(forest));
  };

  std::vector<Rational> unit(caps.size(), Rational(0));
  add(min_spanning_forest(g, std::span<const Rational>(unit)));
  long rounds = 0;
  while (true) {
    if (master.solve() != ExactLp::Status::kOptimal) throw std::logic_error("tree packing master is unbounded");
    ++rounds;
    auto duals = master.duals();
    auto forest = min_spanning_forest(g, std::span<const Rational>(duals));
    Rational price = 0;
    for (EdgeId e : forest) price += duals[static_cast<std::size_t>(e)];
    if (price >= 1) break;
    if (seen.contains(forest)) {
      throw std::logic_error("column generation priced an existing column; arithmetic invariant broken");
    }
    add(std::move(forest));
  }

  std::vector<PackedTree> trees;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Rational y = master.value(static_cast<int>(j));
    if (sgn(y) > 0) trees.push_back(PackedTree{columns[j], y});
  }
  auto packing = finish(std::move(trees), caps, true);
  packing.iterations = rounds;
  return packing;
}

TreePacking saturating_pack(const Graph& g, std::span<const Rational> caps) {
  // In a strength-tight graph every optimal packing has value c(E)/(n - h),
  // and since each forest has n - h edges the loads sum to c(E); with
  // loads <= caps that forces equality on every edge.
  auto packing = exact_pack(g, caps);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (packing.loads[static_cast<std::size_t>(e)] != caps[static_cast<std::size_t>(e)]) {
      throw SaturationError("edge " + std::to_string(e) + " carries load " +
                            to_string(packing.loads[static_cast<std::size_t>(e)]) + " below capacity " +
                            to_string(caps[static_cast<std::size_t>(e)]) + "; graph is not strength-tight");
    }
  }
  return packing;
}

}  // namespace kcut
