#include "kcut/oracle.hpp"

#include <algorithm>
#include <string>

#include "kcut/exact_lp.hpp"

namespace kcut::oracle {

namespace {

void check_partition_limit(const Graph& g, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_n_partitions) {
    throw LimitExceeded("partition enumeration limited to n <= " + std::to_string(limits.max_n_partitions) +
                        ", graph has n = " + std::to_string(g.vertex_count()));
  }
}

Rational label_crossing(const Graph& g, std::span<const int> labels) {
  Rational total = 0;
  for (const auto& e : g.edges()) {
    if (labels[static_cast<std::size_t>(e.u)] != labels[static_cast<std::size_t>(e.v)]) total += e.capacity;
  }
  return total;
}

// Preference among equal-valued partitions: more parts, then canonical order.
bool prefer(const VertexPartition& a, const VertexPartition& b) {
  if (a.part_count() != b.part_count()) return a.part_count() > b.part_count();
  return a < b;
}

// Union-find with undo, for backtracking forest enumeration.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class ForestEnumerator {
 public:
  ForestEnumerator(const Graph& g, long limit)
      : g_(g), limit_(limit), target_(g.vertex_count() - g.component_count()), uf_(g.vertex_count()) {}

  std::vector<std::vector<EdgeId>> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  // Can the chosen edges plus edges [from, m) still reach target size?
  bool completable(int from) const {
    RollbackUnionFind probe = uf_;
    int size = static_cast<int>(chosen_.size());
    for (EdgeId e = from; e < g_.edge_count() && size < target_; ++e) {
      if (probe.unite(g_.edge(e).u, g_.edge(e).v)) ++size;
    }
    return size == target_;
  }

  void recurse(int index) {
    if (static_cast<int>(chosen_.size()) == target_) {
      if (static_cast<long>(out_.size()) >= limit_) {
        throw LimitExceeded("more than " + std::to_string(limit_) + " maximal forests");
      }
      out_.push_back(chosen_);
      return;
    }
    if (index == g_.edge_count()) return;
    const auto& e = g_.edge(index);
    if (uf_.unite(e.u, e.v)) {
      chosen_.push_back(index);
      recurse(index + 1);
      chosen_.pop_back();
      uf_.undo();
    }
    if (completable(index + 1)) recurse(index + 1);
  }

  const Graph& g_;
  long limit_;
  int target_;
  RollbackUnionFind uf_;
  std::vector<EdgeId> chosen_;
  std::vector<std::vector<EdgeId>> out_;
};

}  // namespace

void for_each_partition(int n, const std::function<void(std::span<const int>, int)>& visit) {
  if (n == 0) {
    visit({}, 0);
    return;
  }
  // labels[i] <= 1 + max(labels[0..i-1]); prefix_max[i] = max(labels[0..i]).
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(labels, prefix_max.back() + 1);
    int i = n - 1;
    while (i > 0 && labels[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++labels[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      labels[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

std::vector<VertexPartition> enum_partitions(const Graph& g, const OracleLimits& limits) {
  check_partition_limit(g, limits);
  std::vector<VertexPartition> out;
  for_each_partition(g.vertex_count(),
                     [&](std::span<const int> labels, int) { out.push_back(VertexPartition::from_labels(labels)); });
  return out;
}

StrengthResult oracle_strength(const Graph& g, const OracleLimits& limits) {
  check_partition_limit(g, limits);
  if (g.vertex_count() < 2) throw std::invalid_argument("strength needs at least two vertices");
  bool found = false;
  Rational best_cut;
  int best_parts = 0;
  VertexPartition best;
  for_each_partition(g.vertex_count(), [&](std::span<const int> labels, int parts) {
    if (parts < 2) return;
    Rational c = label_crossing(g, labels);
    // Compare c / (parts - 1) against best_cut / (best_parts - 1).
    if (found) {
      Rational lhs = c * (best_parts - 1);
      Rational rhs = best_cut * (parts - 1);
      if (lhs > rhs) return;
      if (lhs == rhs) {
        auto candidate = VertexPartition::from_labels(labels);
        if (!prefer(candidate, best)) return;
        best = std::move(candidate);
        best_cut = c;
        best_parts = parts;
        return;
      }
    }
    found = true;
    best_cut = c;
    best_parts = parts;
    best = VertexPartition::from_labels(labels);
  });
  return StrengthResult{best_cut / (best_parts - 1), best};
}

MinKCutResult oracle_min_kcut(const Graph& g, int k, const OracleLimits& limits) {
  check_partition_limit(g, limits);
  if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("k out of range");
  bool found = false;
  Rational best_value;
  std::vector<VertexPartition> minimizers;
  for_each_partition(g.vertex_count(), [&](std::span<const int> labels, int parts) {
    if (parts < k) return;
    Rational c = label_crossing(g, labels);
    if (!found || c < best_value) {
      found = true;
      best_value = c;
      minimizers.clear();
    } else if (c > best_value) {
      return;
    }
    minimizers.push_back(VertexPartition::from_labels(labels));
  });
  std::sort(minimizers.begin(), minimizers.end());
  VertexPartition best = *std::min_element(minimizers.begin(), minimizers.end(), prefer);
  return MinKCutResult{CutResult{best, best_value}, std::move(minimizers)};
}

std::vector<CutResult> oracle_cuts_within(const Graph& g, int k, const Rational& bound, const OracleLimits& limits) {
  check_partition_limit(g, limits);
  std::vector<CutResult> out;
  for_each_partition(g.vertex_count(), [&](std::span<const int> labels, int parts) {
    if (parts < k) return;
    Rational c = label_crossing(g, labels);
    if (c <= bound) out.push_back(CutResult{VertexPartition::from_labels(labels), c});
  });
  std::sort(out.begin(), out.end(), cut_less);
  return out;
}

AttackResult oracle_attack(const Graph& g, const Rational& b, const OracleLimits& limits) {
  check_partition_limit(g, limits);
  bool found = false;
  AttackResult result;
  for_each_partition(g.vertex_count(), [&](std::span<const int> labels, int parts) {
    Rational value = label_crossing(g, labels) - b * (parts - 1);
    if (found && value > result.value) return;
    auto p = VertexPartition::from_labels(labels);
    if (!found || value < result.value) {
      found = true;
      result.value = value;
      result.coarsest = p;
      result.finest = p;
      return;
    }
    auto fewer = [](const VertexPartition& a, const VertexPartition& c) {
      if (a.part_count() != c.part_count()) return a.part_count() < c.part_count();
      return a < c;
    };
    if (fewer(p, result.coarsest)) result.coarsest = p;
    if (prefer(p, result.finest)) result.finest = p;
  });
  return result;
}

std::vector<std::vector<EdgeId>> enumerate_maximal_forests(const Graph& g, const OracleLimits& limits) {
  return ForestEnumerator(g, limits.max_spanning_trees).run();
}

Rational oracle_treepack(const Graph& g, const OracleLimits& limits) {
  auto caps = g.capacities();
  return oracle_treepack(g, caps, limits);
}

Rational oracle_treepack(const Graph& g, std::span<const Rational> caps, const OracleLimits& limits) {
  auto forests = enumerate_maximal_forests(g, limits);
  ExactLp lp(std::vector<Rational>(caps.begin(), caps.end()));
  for (const auto& f : forests) {
    std::vector<ExactLp::Entry> entries;
    for (EdgeId e : f) entries.emplace_back(e, Rational(1));
    lp.add_column(Rational(1), std::move(entries));
  }
  if (lp.solve() != ExactLp::Status::kOptimal) throw std::logic_error("tree packing LP reported unbounded");
  return lp.objective();
}

Rational oracle_lp_value(const Graph& g, int k, const OracleLimits& limits) {
  const int h = g.component_count();
  if (k <= h) return 0;
  auto forests = enumerate_maximal_forests(g, limits);
  ExactLp lp(g.capacities());
  for (const auto& f : forests) {
    std::vector<ExactLp::Entry> entries;
    for (EdgeId e : f) entries.emplace_back(e, Rational(1));
    lp.add_column(Rational(k - h), std::move(entries));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    lp.add_column(Rational(-1), {{e, Rational(-1)}});
  }
  if (lp.solve() != ExactLp::Status::kOptimal) {
    throw std::invalid_argument("k-cut LP dual unbounded (k exceeds n?)");
  }
  return lp.objective();
}

}  // namespace kcut::oracle
