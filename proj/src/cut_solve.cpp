#include "kcut/cut_solve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kcut/detail/union_find.hpp"

namespace kcut {

namespace {

constexpr int kMaxMergeBlocks = 12;

void check_k(const Graph& g, int k) {
  if (k < 2 || k > g.vertex_count()) {
    throw std::invalid_argument("k must satisfy 2 <= k <= n (got k=" + std::to_string(k) + ", n=" +
                                std::to_string(g.vertex_count()) + ")");
  }
}

// Restricted-growth strings over `items` with at least `min_groups` groups.
class MergeEnumerator {
 public:
  MergeEnumerator(int items, int min_groups, const std::function<void(std::span<const int>, int)>& visit)
      : items_(items), min_groups_(min_groups), visit_(visit), group_(static_cast<std::size_t>(items)) {}

  void run() {
    if (items_ >= min_groups_) step(0, 0);
  }

 private:
  void step(int i, int groups) {
    if (groups + (items_ - i) < min_groups_) return;
    if (i == items_) {
      visit_(group_, groups);
      return;
    }
    for (int label = 0; label <= groups; ++label) {
      group_[static_cast<std::size_t>(i)] = label;
      step(i + 1, label == groups ? groups + 1 : groups);
    }
  }

  int items_;
  int min_groups_;
  const std::function<void(std::span<const int>, int)>& visit_;
  std::vector<int> group_;
};

std::string key_of(std::span<const int> labels) {
  return std::string(reinterpret_cast<const char*>(labels.data()), labels.size() * sizeof(int));
}

Rational value_of(const Graph& g, std::span<const int> labels) {
  Rational v = 0;
  for (const auto& e : g.edges()) {
    if (labels[static_cast<std::size_t>(e.u)] != labels[static_cast<std::size_t>(e.v)]) v += e.capacity;
  }
  return v;
}

struct Found {
  Rational value;
  std::vector<int> labels;
};

// Distinct partitions from every support tree, keeping those whose value
// could still matter: all of them when `keep_all`, else only values <= the
// best seen so far.
struct Scan {
  long candidates = 0;
  int trees = 0;
  std::vector<Found> found;
  Rational best;
  bool any = false;
};

Scan scan_trees(const Graph& g, const TreePacking& packing, int h, int k, bool keep_all) {
  Scan s;
  std::unordered_set<std::string> seen;
  for (const auto& tree : packing.trees) {
    if (sgn(tree.weight) <= 0) continue;
    ++s.trees;
    for_each_tree_cut(g, tree.edges, h, k, [&](std::span<const int> labels, int) {
      ++s.candidates;
      if (!seen.insert(key_of(labels)).second) return;
      Rational v = value_of(g, labels);
      if (!s.any || v < s.best) {
        s.best = v;
        s.any = true;
      }
      if (keep_all || v <= s.best) s.found.push_back(Found{v, std::vector<int>(labels.begin(), labels.end())});
    });
  }
  return s;
}

std::vector<CutResult> collect(const Graph& g, const std::vector<Found>& found, const Rational& threshold) {
  std::vector<CutResult> out;
  for (const auto& f : found) {
    if (f.value > threshold) continue;
    auto cut = cut_of_partition(g, VertexPartition::from_labels(f.labels));
    if (cut.value != f.value) throw std::logic_error("cut value mismatch during enumeration");
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(), cut_less);
  return out;
}

VertexPartition positive_components(const Graph& g) {
  std::vector<bool> keep(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[static_cast<std::size_t>(e)] = sgn(g.edge(e).capacity) > 0;
  return components_of(g, keep);
}

// Every partition that coarsens `blocks` into >= k groups costs 0.
EnumerationReport zero_value_cuts(const Graph& g, const VertexPartition& blocks, int k) {
  EnumerationReport r;
  r.k = k;
  r.threshold = 0;
  if (blocks.part_count() > kMaxMergeBlocks) {
    r.complete = false;
    r.cuts.push_back(cut_of_partition(g, blocks));
    return r;
  }
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
  std::function<void(std::span<const int>, int)> visit = [&](std::span<const int> group, int) {
    ++r.candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      labels[static_cast<std::size_t>(v)] = group[static_cast<std::size_t>(blocks.part_of(v))];
    }
    r.cuts.push_back(cut_of_partition(g, VertexPartition::from_labels(labels)));
  };
  MergeEnumerator(blocks.part_count(), k, visit).run();
  std::sort(r.cuts.begin(), r.cuts.end(), cut_less);
  return r;
}

EnumerationReport all_singletons(const Graph& g, int k) {
  EnumerationReport r;
  r.k = k;
  r.candidates = 1;
  r.cuts.push_back(cut_of_partition(g, VertexPartition::singletons(g.vertex_count())));
  r.threshold = r.cuts.front().value;
  return r;
}

double approx_epsilon(const SolveOptions& options, int k) {
  double eps = options.epsilon > 0 ? options.epsilon : 1.0 / (2.0 * k);
  if (!(eps * (2 * k - 1) < 1)) {
    throw std::invalid_argument("approximate mode needs epsilon < 1/(2k-1)");
  }
  return eps;
}

KCutSolution from_report(EnumerationReport report) {
  KCutSolution s;
  s.report = std::move(report);
  s.best = s.report.cuts.front();
  for (const auto& c : s.report.cuts) {
    if (c.value == s.best.value) s.minimizers.push_back(c);
  }
  return s;
}

}  // namespace

void for_each_tree_cut(const Graph& g, std::span<const EdgeId> tree, int h, int min_parts,
                       const std::function<void(std::span<const int> labels, int parts)>& emit) {
  const int n = g.vertex_count();
  const int r = static_cast<int>(tree.size());
  std::vector<bool> removed(static_cast<std::size_t>(r), false);
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::vector<int> labels(static_cast<std::size_t>(n));

  auto visit_subset = [&]() {
    detail::UnionFind uf(n);
    for (int i = 0; i < r; ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      const auto& e = g.edge(tree[static_cast<std::size_t>(i)]);
      uf.unite(e.u, e.v);
    }
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (VertexId v = 0; v < n; ++v) {
      int root = uf.find(v);
      auto& id = id_of_root[static_cast<std::size_t>(root)];
      if (id < 0) id = count++;
      comp[static_cast<std::size_t>(v)] = id;
    }
    std::function<void(std::span<const int>, int)> visit = [&](std::span<const int> group, int parts) {
      for (VertexId v = 0; v < n; ++v) {
        labels[static_cast<std::size_t>(v)] = group[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
      }
      emit(labels, parts);
    };
    MergeEnumerator(count, min_parts, visit).run();
  };

  std::function<void(int, int)> choose = [&](int start, int left) {
    visit_subset();
    if (left == 0) return;
    for (int i = start; i < r; ++i) {
      removed[static_cast<std::size_t>(i)] = true;
      choose(i + 1, left - 1);
      removed[static_cast<std::size_t>(i)] = false;
    }
  };
  choose(0, std::min(h, r));
}

std::vector<CutResult> cuts_from_tree(const Graph& g, std::span<const EdgeId> tree, int h, int k) {
  std::vector<CutResult> out;
  for_each_tree_cut(g, tree, h, k, [&](std::span<const int> labels, int) {
    out.push_back(cut_of_partition(g, VertexPartition::from_labels(labels)));
  });
  return out;
}

TreePacking dual_packing(const Graph& g, const PrincipalSequence& psp, int k, const SolveOptions& options) {
  auto dual = lp_dual(g, psp, k, DualMode::kLazy);
  if (sgn(dual.lambda) == 0) throw std::invalid_argument("the minimum k-cut is zero; there is no dual packing to scan");
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<Rational> caps(m);
  for (std::size_t e = 0; e < m; ++e) caps[e] = g.edge(static_cast<EdgeId>(e)).capacity + dual.z[e];
  if (options.mode == SolveMode::kExact) return exact_pack(g, caps);

  PackConfig cfg;
  cfg.epsilon = approx_epsilon(options, k);
  auto sub = positive_part(g.with_capacities(caps));
  auto local = mwu_pack(sub.graph, sub.graph.capacities(), cfg);
  TreePacking out;
  for (const auto& t : local.trees) {
    PackedTree mapped{{}, t.weight};
    for (EdgeId e : t.edges) mapped.edges.push_back(sub.edge_origin[static_cast<std::size_t>(e)]);
    std::sort(mapped.edges.begin(), mapped.edges.end());
    out.trees.push_back(std::move(mapped));
  }
  out.capacities = caps;
  out.loads = compute_loads(g.edge_count(), out.trees);
  out.total_value = local.total_value;
  out.exact = false;
  out.approx_value = local.approx_value;
  out.iterations = local.iterations;
  return out;
}

KCutSolution min_kcut(const Graph& g, int k, const SolveOptions& options) {
  check_k(g, k);
  const int h = options.mode == SolveMode::kExact ? 2 * k - 3 : 2 * k - 2;
  const double eps = options.mode == SolveMode::kApprox ? approx_epsilon(options, k) : 0.0;
  auto finish = [&](EnumerationReport report) {
    report.mode = options.mode;
    report.epsilon = eps;
    return from_report(std::move(report));
  };

  if (k == g.vertex_count()) return finish(all_singletons(g, k));
  auto blocks = positive_components(g);
  if (blocks.part_count() >= k) return finish(zero_value_cuts(g, blocks, k));

  auto psp = principal_sequence(g);
  auto packing = dual_packing(g, psp, k, options);
  auto scan = scan_trees(g, packing, h, k, false);
  EnumerationReport report;
  report.k = k;
  report.h = h;
  report.candidates = scan.candidates;
  report.trees = scan.trees;
  report.threshold = scan.best;
  report.cuts = collect(g, scan.found, scan.best);
  auto solution = finish(std::move(report));
  solution.packing = std::move(packing);
  solution.z = lp_dual(g, psp, k, DualMode::kLazy).z;
  return solution;
}

EnumerationReport enumerate_approx_kcuts(const Graph& g, int k, const Rational& alpha) {
  check_k(g, k);
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  auto blocks = positive_components(g);
  if (blocks.part_count() >= k) return zero_value_cuts(g, blocks, k);

  Rational span = 2 * alpha * (k - 1);
  mpz_class floor_h = span.get_num() / span.get_den();
  const int h = static_cast<int>(floor_h.get_si());
  auto psp = principal_sequence(g);
  auto packing = dual_packing(g, psp, k, SolveOptions{});
  auto scan = scan_trees(g, packing, h, k, true);
  EnumerationReport report;
  report.k = k;
  report.h = h;
  report.candidates = scan.candidates;
  report.trees = scan.trees;
  report.threshold = alpha * scan.best;
  report.cuts = collect(g, scan.found, report.threshold);
  return report;
}

RespectStats respect_stats(const TreePacking& packing, std::span<const EdgeId> cut_edges, int h) {
  if (packing.trees.empty()) throw std::invalid_argument("respect_stats needs a nonempty packing");
  RespectStats s;
  s.h = h;
  s.cut_edges.assign(cut_edges.begin(), cut_edges.end());
  std::sort(s.cut_edges.begin(), s.cut_edges.end());
  Rational total = 0;
  Rational within = 0;
  s.min_crossing = -1;
  for (const auto& tree : packing.trees) {
    int count = 0;
    for (EdgeId e : tree.edges) {
      if (std::binary_search(s.cut_edges.begin(), s.cut_edges.end(), e)) ++count;
    }
    s.crossings.push_back(count);
    total += tree.weight;
    if (count <= h) within += tree.weight;
    if (sgn(tree.weight) > 0 && (s.min_crossing < 0 || count < s.min_crossing)) s.min_crossing = count;
  }
  s.q = sgn(total) > 0 ? Rational(within / total) : Rational(0);
  return s;
}

RespectStats respect_stats(const TreePacking& packing, std::span<const EdgeId> cut_edges, int h,
                           const Rational& alpha, int k, int n) {
  auto s = respect_stats(packing, cut_edges, h);
  s.bound = respect_lower_bound(alpha, k, h, n);
  return s;
}

Rational respect_lower_bound(const Rational& alpha, int k, int h, int n) {
  return 1 - 2 * alpha * (k - 1) * (1 - ratio(1, n)) / (h + 1);
}

Rational packing_respect_lower_bound(const Rational& alpha, int h, int n, const Rational& eps) {
  return ((h + 1) * (1 - eps) - 2 * alpha * (1 - ratio(1, n))) / h;
}

Rational cut_count_ceiling(int h, int n, const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive");
  // Bell triangle up to Bell(h + 1).
  std::vector<mpz_class> row{1};
  for (int i = 0; i < h + 1; ++i) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(h));
  return Rational(row.front() * power) / q;
}

RoundResult round_lp(const Graph& g, const PrimalSolution& x) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (x.x.size() != m) throw std::invalid_argument("x has the wrong length");
  for (const auto& v : x.x) {
    if (v < 0 || v > 1) throw std::invalid_argument("x must lie in [0, 1]");
  }
  check_k(g, x.k);
  const int k = x.k;
  RoundResult out;

  Rational objective = 0;
  for (std::size_t e = 0; e < m; ++e) objective += g.edge(static_cast<EdgeId>(e)).capacity * x.x[e];
  if (verify_primal(g, x.x, k).feasible) {
    out.certified = objective == lagrangean_value(principal_sequence(g), k).value;
  }
  out.note = out.certified ? "x is optimal; value <= 2(1-1/n) * LP" : "x is not certified optimal; no bound claimed";

  std::vector<EdgeId> zero;
  for (std::size_t e = 0; e < m; ++e) {
    if (sgn(x.x[e]) == 0) zero.push_back(static_cast<EdgeId>(e));
  }
  auto con = contract(g, zero);
  const Graph& gc = con.graph;
  std::vector<bool> residual(static_cast<std::size_t>(gc.edge_count()));
  for (EdgeId e = 0; e < gc.edge_count(); ++e) {
    residual[static_cast<std::size_t>(e)] = x.x[static_cast<std::size_t>(con.edge_origin[static_cast<std::size_t>(e)])] < 1;
  }
  auto comps = components_of(gc, residual);
  out.residual_components = comps.part_count();
  std::vector<int> label(comps.labels());

  if (comps.part_count() < k) {
    std::vector<Rational> degree(static_cast<std::size_t>(gc.vertex_count()), Rational(0));
    for (EdgeId e = 0; e < gc.edge_count(); ++e) {
      if (!residual[static_cast<std::size_t>(e)]) continue;
      const auto& ed = gc.edge(e);
      degree[static_cast<std::size_t>(ed.u)] += ed.capacity;
      degree[static_cast<std::size_t>(ed.v)] += ed.capacity;
    }
    auto by_degree = [&](VertexId a, VertexId b) {
      const auto& da = degree[static_cast<std::size_t>(a)];
      const auto& db = degree[static_cast<std::size_t>(b)];
      return da != db ? da < db : a < b;
    };
    // Isolating every vertex of a residual component would not add a part
    // for the last one, so each component keeps its largest-degree vertex.
    std::vector<VertexId> candidates;
    for (const auto& part : comps.parts()) {
      if (part.size() < 2) continue;
      VertexId keep = *std::max_element(part.begin(), part.end(), by_degree);
      for (VertexId v : part) {
        if (v != keep) candidates.push_back(v);
      }
    }
    std::sort(candidates.begin(), candidates.end(), by_degree);
    const auto need = static_cast<std::size_t>(k - comps.part_count());
    if (candidates.size() < need) throw std::logic_error("rounding: too few residual vertices to isolate");
    int next = comps.part_count();
    std::vector<VertexId> representative(static_cast<std::size_t>(gc.vertex_count()), -1);
    for (VertexId v = g.vertex_count() - 1; v >= 0; --v) {
      representative[static_cast<std::size_t>(con.vertex_map[static_cast<std::size_t>(v)])] = v;
    }
    for (std::size_t i = 0; i < need; ++i) {
      label[static_cast<std::size_t>(candidates[i])] = next++;
      out.isolated.push_back(representative[static_cast<std::size_t>(candidates[i])]);
    }
    std::sort(out.isolated.begin(), out.isolated.end());
  }

  std::vector<int> lifted(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    lifted[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(con.vertex_map[static_cast<std::size_t>(v)])];
  }
  out.cut = cut_of_partition(g, VertexPartition::from_labels(lifted));
  return out;
}

CutResult ravi_sinha_cut(const Graph& g, const PrincipalSequence& psp, int k) {
  check_k(g, k);
  const int j = psp.level_for(k);
  if (j == 0 || psp.kappa(j) == k) return cut_of_partition(g, psp.partition(j));

  const auto& prev = psp.partition(j - 1);
  const auto& level = psp.levels[static_cast<std::size_t>(j - 1)];
  const auto& next = level.partition;

  // Shore capacity: B_j edges leaving the part, i.e. its boundary inside
  // the component being split.
  std::vector<Rational> shore(static_cast<std::size_t>(next.part_count()), Rational(0));
  for (EdgeId e : level.increment) {
    const auto& ed = g.edge(e);
    shore[static_cast<std::size_t>(next.part_of(ed.u))] += ed.capacity;
    shore[static_cast<std::size_t>(next.part_of(ed.v))] += ed.capacity;
  }
  auto cheaper = [&](int a, int b) {
    const auto& sa = shore[static_cast<std::size_t>(a)];
    const auto& sb = shore[static_cast<std::size_t>(b)];
    return sa != sb ? sa < sb : a < b;
  };
  std::vector<int> candidates;
  for (const auto& component : level.split_components) {
    std::vector<int> parts;
    for (VertexId v : component) parts.push_back(next.part_of(v));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    int keep = *std::max_element(parts.begin(), parts.end(), cheaper);
    for (int p : parts) {
      if (p != keep) candidates.push_back(p);
    }
  }
  std::sort(candidates.begin(), candidates.end(), cheaper);
  const auto need = static_cast<std::size_t>(k - prev.part_count());
  if (candidates.size() < need) throw std::logic_error("ravi_sinha_cut: not enough shores");

  std::vector<int> labels(prev.labels());
  int fresh = prev.part_count();
  for (std::size_t i = 0; i < need; ++i) {
    for (VertexId v : next.parts()[static_cast<std::size_t>(candidates[i])]) labels[static_cast<std::size_t>(v)] = fresh;
    ++fresh;
  }
  return cut_of_partition(g, VertexPartition::from_labels(labels));
}

}  // namespace kcut
