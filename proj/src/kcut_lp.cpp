#include "kcut/kcut_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcut {

namespace {

void check_k(const Graph& g, int k) {
  if (k < 2 || k > g.vertex_count()) {
    throw std::invalid_argument("k must satisfy 2 <= k <= n (got k=" + std::to_string(k) + ", n=" +
                                std::to_string(g.vertex_count()) + ")");
  }
}

// Edges of B_1 that a zero critical value forces into every tree: a
// spanning forest of G / P_1, which only has zero-capacity edges.
std::vector<EdgeId> zero_level_forest(const Graph& g, const PrincipalSequence& psp) {
  auto quotient = contract_partition(g, psp.partition(1));
  std::vector<Rational> zeros(static_cast<std::size_t>(quotient.graph.edge_count()), Rational(0));
  std::vector<EdgeId> out;
  for (EdgeId e : min_spanning_forest(quotient.graph, std::span<const Rational>(zeros))) {
    out.push_back(quotient.edge_origin[static_cast<std::size_t>(e)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool zero_first_level(const PrincipalSequence& psp) { return psp.level_count() > 0 && sgn(psp.lambda(1)) == 0; }

TreePacking empty_packing(std::span<const Rational> caps) {
  TreePacking p;
  p.capacities.assign(caps.begin(), caps.end());
  p.loads.assign(caps.size(), Rational(0));
  p.total_value = 0;
  return p;
}

}  // namespace

PrimalSolution lp_primal(const Graph& g, const PrincipalSequence& psp, int k) {
  check_k(g, k);
  PrimalSolution s;
  s.k = k;
  s.level = psp.level_for(k);
  s.x.assign(static_cast<std::size_t>(g.edge_count()), Rational(0));
  s.alpha = 0;
  if (s.level > 0) {
    const int j = s.level;
    s.alpha = ratio(k - psp.kappa(j - 1), psp.kappa(j) - psp.kappa(j - 1));
    if (j > 1) {
      for (EdgeId e : psp.levels[static_cast<std::size_t>(j - 2)].cumulative) s.x[static_cast<std::size_t>(e)] = 1;
    }
    for (EdgeId e : psp.levels[static_cast<std::size_t>(j - 1)].increment) s.x[static_cast<std::size_t>(e)] = s.alpha;
  }
  s.objective = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) s.objective += g.edge(e).capacity * s.x[static_cast<std::size_t>(e)];
  return s;
}

DualSolution lp_dual(const Graph& g, const PrincipalSequence& psp, int k, DualMode mode) {
  check_k(g, k);
  const auto m = static_cast<std::size_t>(g.edge_count());
  DualSolution d;
  d.k = k;
  d.mode = mode;
  d.level = psp.level_for(k);
  d.lambda = d.level > 0 ? psp.lambda(d.level) : Rational(0);
  d.z.assign(m, Rational(0));

  const auto level_of = psp.edge_levels(g.edge_count());
  std::vector<bool> forced(m, false);
  if (d.level >= 2 && zero_first_level(psp)) {
    for (EdgeId e : zero_level_forest(g, psp)) forced[static_cast<std::size_t>(e)] = true;
  }
  for (std::size_t e = 0; e < m; ++e) {
    const int i = level_of[e];
    if (i == 0 || i >= d.level) continue;
    const Rational& li = psp.lambda(i);
    if (sgn(li) == 0) {
      if (forced[e]) d.z[e] = d.lambda;
    } else {
      d.z[e] = (d.lambda / li - 1) * g.edge(static_cast<EdgeId>(e)).capacity;
    }
  }

  std::vector<Rational> caps(m);
  for (std::size_t e = 0; e < m; ++e) caps[e] = g.edge(static_cast<EdgeId>(e)).capacity + d.z[e];

  if (mode == DualMode::kExplicit) {
    d.packing = d.level == 0 ? empty_packing(caps) : exact_pack(g, caps);
    d.loads = d.packing.loads;
    d.tree_total = d.packing.total_value;
  } else {
    d.loads.assign(m, Rational(0));
    if (d.level > 0) {
      for (std::size_t e = 0; e < m; ++e) {
        const int i = level_of[e];
        if (i == 0) continue;
        const Rational& li = psp.lambda(i);
        if (sgn(li) == 0) {
          if (forced[e]) d.loads[e] = d.lambda;
        } else {
          d.loads[e] = d.lambda * g.edge(static_cast<EdgeId>(e)).capacity / li;
        }
      }
    }
    d.tree_total = d.lambda;
  }
  d.objective = (k - psp.kappa(0)) * d.tree_total;
  for (const auto& z : d.z) d.objective -= z;
  return d;
}

IdealPacking ideal_packing(const Graph& g, const PrincipalSequence& psp) {
  const int m = g.edge_count();
  IdealPacking out;
  out.marginal.assign(static_cast<std::size_t>(m), Rational(0));
  for (int i = 1; i <= psp.level_count(); ++i) {
    const auto& level = psp.levels[static_cast<std::size_t>(i - 1)];
    for (const auto& component : level.split_components) {
      auto sub = induced_subgraph(g, component);
      std::vector<int> labels;
      labels.reserve(component.size());
      for (VertexId v : sub.vertex_origin) labels.push_back(level.partition.part_of(v));
      auto quotient = contract_partition(sub.graph, VertexPartition::from_labels(labels));
      const Graph& h = quotient.graph;
      auto origin = [&](EdgeId local) {
        return sub.edge_origin[static_cast<std::size_t>(quotient.edge_origin[static_cast<std::size_t>(local)])];
      };

      IdealBlock block;
      block.level = i;
      block.component = component;
      for (EdgeId e = 0; e < h.edge_count(); ++e) block.edges.push_back(origin(e));
      std::sort(block.edges.begin(), block.edges.end());

      TreePacking local;
      if (sgn(level.lambda) > 0) {
        block.scale = level.lambda;
        local = saturating_pack(h, h.capacities());
      } else {
        block.scale = 1;
        std::vector<Rational> zeros(static_cast<std::size_t>(h.edge_count()), Rational(0));
        local.trees.push_back(PackedTree{min_spanning_forest(h, std::span<const Rational>(zeros)), Rational(1)});
      }

      std::vector<PackedTree> trees;
      for (const auto& t : local.trees) {
        PackedTree mapped{{}, t.weight};
        for (EdgeId e : t.edges) mapped.edges.push_back(origin(e));
        std::sort(mapped.edges.begin(), mapped.edges.end());
        trees.push_back(std::move(mapped));
      }
      block.packing.capacities.assign(static_cast<std::size_t>(m), Rational(0));
      for (EdgeId e : block.edges) block.packing.capacities[static_cast<std::size_t>(e)] = g.edge(e).capacity;
      block.packing.loads = compute_loads(m, trees);
      block.packing.total_value = 0;
      for (const auto& t : trees) block.packing.total_value += t.weight;
      block.packing.approx_value = to_double(block.packing.total_value);
      block.packing.trees = std::move(trees);
      for (EdgeId e : block.edges) {
        out.marginal[static_cast<std::size_t>(e)] = block.packing.loads[static_cast<std::size_t>(e)] / block.scale;
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

std::vector<EdgeId> combine_trees(const IdealPacking& ideal, std::span<const int> choice) {
  if (choice.size() != ideal.blocks.size()) throw std::invalid_argument("one tree choice per block is required");
  std::vector<EdgeId> out;
  for (std::size_t b = 0; b < choice.size(); ++b) {
    const auto& trees = ideal.blocks[b].packing.trees;
    const auto c = static_cast<std::size_t>(choice[b]);
    if (choice[b] < 0 || c >= trees.size()) throw std::out_of_range("tree choice out of range");
    out.insert(out.end(), trees[c].edges.begin(), trees[c].edges.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

LagrangeanResult lagrangean_value(const PrincipalSequence& psp, int k) {
  auto eval = [&](const Rational& b) -> Rational {
    Rational best = psp.cut_value(0) - b * (psp.kappa(0) - 1);
    for (int i = 1; i <= psp.level_count(); ++i) {
      Rational v = psp.cut_value(i) - b * (psp.kappa(i) - 1);
      if (v < best) best = v;
    }
    return best + b * (k - 1);
  };
  LagrangeanResult r{eval(Rational(0)), Rational(0)};
  for (int i = 1; i <= psp.level_count(); ++i) {
    Rational v = eval(psp.lambda(i));
    if (v > r.value) r = LagrangeanResult{v, psp.lambda(i)};
  }
  return r;
}

PrimalVerdict verify_primal(const Graph& g, std::span<const Rational> x, int k) {
  PrimalVerdict v;
  v.required = k - g.component_count();
  if (static_cast<int>(x.size()) != g.edge_count()) {
    v.detail = "x has " + std::to_string(x.size()) + " entries for " + std::to_string(g.edge_count()) + " edges";
    return v;
  }
  v.bounds_ok = true;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] < 0 || x[e] > 1) {
      v.bounds_ok = false;
      v.detail = "x[" + std::to_string(e) + "] = " + to_string(x[e]) + " outside [0, 1]";
      break;
    }
  }
  v.min_forest = min_spanning_forest(g, x);
  v.forest_weight = 0;
  for (EdgeId e : v.min_forest) v.forest_weight += x[static_cast<std::size_t>(e)];
  v.feasible = v.bounds_ok && v.forest_weight >= v.required;
  if (v.bounds_ok) {
    v.detail = "minimum forest weight " + to_string(v.forest_weight) + (v.feasible ? " >= " : " < ") +
               to_string(v.required);
  }
  return v;
}

DualVerdict verify_dual(const Graph& g, const DualSolution& dual) {
  DualVerdict v;
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (dual.z.size() != m || dual.loads.size() != m) {
    v.detail = "vector sizes do not match the edge count";
    return v;
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (sgn(dual.z[e]) < 0) {
      v.detail = "z[" + std::to_string(e) + "] is negative";
      return v;
    }
  }
  std::vector<Rational> loads;
  Rational total = 0;
  if (dual.mode == DualMode::kExplicit) {
    for (std::size_t t = 0; t < dual.packing.trees.size(); ++t) {
      const auto& tree = dual.packing.trees[t];
      if (sgn(tree.weight) < 0) {
        v.detail = "tree " + std::to_string(t) + " has negative weight";
        return v;
      }
      if (!is_maximal_forest(g, tree.edges)) {
        v.detail = "tree " + std::to_string(t) + " is not a maximal forest";
        return v;
      }
      total += tree.weight;
    }
    loads = compute_loads(g.edge_count(), dual.packing.trees);
  } else {
    loads = dual.loads;
    total = dual.tree_total;
  }
  for (std::size_t e = 0; e < m; ++e) {
    Rational cap = g.edge(static_cast<EdgeId>(e)).capacity + dual.z[e];
    if (loads[e] > cap) {
      v.overloaded_edge = static_cast<EdgeId>(e);
      v.detail = "edge " + std::to_string(e) + " carries " + to_string(loads[e]) + " > " + to_string(cap);
      return v;
    }
  }
  v.objective = (dual.k - g.component_count()) * total;
  for (const auto& z : dual.z) v.objective -= z;
  if (v.objective != dual.objective) {
    v.detail = "recomputed objective " + to_string(v.objective) + " differs from reported " + to_string(dual.objective);
    return v;
  }
  v.feasible = true;
  v.detail = "all loads within c + z; objective " + to_string(v.objective);
  return v;
}

SlacknessVerdict check_complementary_slackness(const Graph& g, std::span<const Rational> x, const DualSolution& dual) {
  if (dual.mode != DualMode::kExplicit) throw std::invalid_argument("complementary slackness needs an explicit dual");
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (x.size() != m || dual.z.size() != m) throw std::invalid_argument("vector sizes do not match the edge count");
  SlacknessVerdict v;
  v.holds = {true, true, true};

  for (std::size_t e = 0; e < m && v.holds[0]; ++e) {
    if (sgn(dual.z[e]) > 0 && x[e] != 1) {
      v.holds[0] = false;
      v.detail[0] = "edge " + std::to_string(e) + " has z > 0 but x = " + to_string(x[e]);
    }
  }

  const Rational rhs = dual.k - g.component_count();
  for (std::size_t t = 0; t < dual.packing.trees.size() && v.holds[1]; ++t) {
    const auto& tree = dual.packing.trees[t];
    if (sgn(tree.weight) <= 0) continue;
    Rational sum = 0;
    for (EdgeId e : tree.edges) sum += x[static_cast<std::size_t>(e)];
    if (sum != rhs) {
      v.holds[1] = false;
      v.detail[1] = "tree " + std::to_string(t) + " has x(T) = " + to_string(sum) + " != " + to_string(rhs);
    }
  }

  auto loads = compute_loads(g.edge_count(), dual.packing.trees);
  for (std::size_t e = 0; e < m && v.holds[2]; ++e) {
    Rational cap = g.edge(static_cast<EdgeId>(e)).capacity + dual.z[e];
    if (sgn(x[e]) > 0 && loads[e] != cap) {
      v.holds[2] = false;
      v.detail[2] = "edge " + std::to_string(e) + " has x > 0 but load " + to_string(loads[e]) + " != " + to_string(cap);
    }
  }
  return v;
}

}  // namespace kcut
