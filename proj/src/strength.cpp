#include "kcut/strength.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kcut/max_flow.hpp"

namespace kcut {

namespace {

// Optimal partition of the whole vertex set for the cost
// c(E(P)) - b |P|, built one vertex at a time.
std::vector<int> dilworth_labels(const Graph& g, const Rational& b) {
  const int n = g.vertex_count();
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  int next_label = 0;
  // Adjacency between vertices (sums parallel edges).
  std::vector<std::vector<std::pair<VertexId, Rational>>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    if (sgn(e.capacity) == 0) continue;
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.capacity);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.capacity);
  }
  const Rational half(1, 2);

  for (VertexId v = 0; v < n; ++v) {
    // Compact the labels of blocks among vertices < v.
    std::map<int, int> index;
    for (VertexId u = 0; u < v; ++u) index.try_emplace(block_of[static_cast<std::size_t>(u)], static_cast<int>(index.size()));
    const int r = static_cast<int>(index.size());
    if (r == 0) {
      block_of[static_cast<std::size_t>(v)] = next_label++;
      continue;
    }
    auto local = [&](VertexId u) { return index.at(block_of[static_cast<std::size_t>(u)]); };

    std::vector<Rational> to_new(static_cast<std::size_t>(r), Rational(0));
    std::map<std::pair<int, int>, Rational> between;
    std::vector<Rational> degree(static_cast<std::size_t>(r), Rational(0));
    for (VertexId u = 0; u < v; ++u) {
      for (const auto& [w, c] : adj[static_cast<std::size_t>(u)]) {
        if (w == v) {
          to_new[static_cast<std::size_t>(local(u))] += c;
        } else if (w < v && u < w) {
          int a = local(u);
          int bb = local(w);
          if (a == bb) continue;
          between[std::minmax(a, bb)] += c;
          degree[static_cast<std::size_t>(a)] += c;
          degree[static_cast<std::size_t>(bb)] += c;
        }
      }
    }

    const int source = r;
    const int sink = r + 1;
    FlowNetwork net(r + 2);
    for (int j = 0; j < r; ++j) {
      Rational a = b - degree[static_cast<std::size_t>(j)] * half;
      Rational from_source = to_new[static_cast<std::size_t>(j)];
      if (sgn(a) > 0) {
        net.add_arc(j, sink, a);
      } else if (sgn(a) < 0) {
        from_source -= a;
      }
      if (sgn(from_source) > 0) net.add_arc(source, j, from_source);
    }
    for (const auto& [key, c] : between) net.add_undirected(key.first, key.second, c * half);
    net.max_flow(source, sink);
    auto side = net.source_side(source);

    int merged = next_label++;
    for (VertexId u = 0; u < v; ++u) {
      if (side[static_cast<std::size_t>(local(u))]) block_of[static_cast<std::size_t>(u)] = merged;
    }
    block_of[static_cast<std::size_t>(v)] = merged;
  }
  return block_of;
}

Rational line_value(const Graph& g, const VertexPartition& p, const Rational& b) {
  return crossing_value(g, p) - b * (p.part_count() - 1);
}

// No breakpoint other than b itself lies within this distance of b.
Rational separation(const Graph& g, const Rational& b) {
  mpz_class lcm = 1;
  for (const auto& e : g.edges()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.capacity.get_den_mpz_t());
  mpz_class den = 2 * lcm * b.get_den() * std::max(1, g.vertex_count() - 1);
  return Rational(mpz_class(1), den);
}

struct Line {
  Rational cut;
  int kappa;
  Rational at(const Rational& b) const { return cut - b * (kappa - 1); }
};

Line line_of(const Graph& g, const VertexPartition& p) { return Line{crossing_value(g, p), p.part_count()}; }

void search(const Graph& g, const Line& left, const Line& right, std::vector<Breakpoint>& out) {
  Rational b = (right.cut - left.cut) / (right.kappa - left.kappa);
  auto att = attack(g, b);
  if (att.value == left.at(b)) {
    out.push_back(Breakpoint{b, att.coarsest, att.finest});
    return;
  }
  Line low = line_of(g, att.coarsest);
  Line high = line_of(g, att.finest);
  search(g, left, low, out);
  if (low.kappa != high.kappa) out.push_back(Breakpoint{b, att.coarsest, att.finest});
  search(g, high, right, out);
}

PspLevel make_level(const Graph& g, const VertexPartition& previous, const std::vector<EdgeId>& previous_cut,
                    VertexPartition next, Rational lambda) {
  PspLevel level;
  level.lambda = std::move(lambda);
  level.cumulative = crossing_edges(g, next);
  std::set_difference(level.cumulative.begin(), level.cumulative.end(), previous_cut.begin(), previous_cut.end(),
                      std::back_inserter(level.increment));
  for (const auto& part : previous.parts()) {
    int label = next.part_of(part.front());
    bool split = std::any_of(part.begin(), part.end(), [&](VertexId v) { return next.part_of(v) != label; });
    if (split) level.split_components.push_back(part);
  }
  level.kappa = next.part_count();
  level.cut_value = 0;
  for (EdgeId e : level.cumulative) level.cut_value += g.edge(e).capacity;
  level.partition = std::move(next);
  return level;
}

}  // namespace

std::pair<Rational, VertexPartition> attack_any(const Graph& g, const Rational& b) {
  auto labels = dilworth_labels(g, b);
  auto p = VertexPartition::from_labels(labels);
  Rational value = line_value(g, p, b);
  return {value, std::move(p)};
}

AttackResult attack(const Graph& g, const Rational& b) {
  AttackResult result;
  result.b = b;
  if (g.vertex_count() == 0) return result;
  Rational eps = separation(g, b);
  auto finest_labels = dilworth_labels(g, b + eps);
  auto coarsest_labels = dilworth_labels(g, b - eps);
  result.finest = VertexPartition::from_labels(finest_labels);
  result.coarsest = VertexPartition::from_labels(coarsest_labels);
  result.value = line_value(g, result.finest, b);
  Rational check = line_value(g, result.coarsest, b);
  if (check != result.value) throw std::logic_error("attack: extreme minimizers disagree on g(b)");
  return result;
}

std::vector<Breakpoint> breakpoints(const Graph& g) {
  std::vector<Breakpoint> out;
  const int n = g.vertex_count();
  if (n < 2) return out;
  // At b = 0 the coarsest minimizer is the component partition (cut 0).
  Line left = line_of(g, components(g));
  Line right = line_of(g, VertexPartition::singletons(n));
  if (left.kappa == right.kappa) return out;
  search(g, left, right, out);
  return out;
}

StrengthResult strength(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("strength needs at least two vertices");
  Rational b = g.total_capacity() / (n - 1);
  while (true) {
    auto [value, p] = attack_any(g, b);
    if (sgn(value) >= 0) break;
    // value < 0 forces |P| >= 2 and a strictly smaller ratio.
    b = crossing_value(g, p) / (p.part_count() - 1);
  }
  auto att = attack(g, b);
  return StrengthResult{b, att.finest};
}

std::vector<int> PrincipalSequence::edge_levels(int edge_count) const {
  std::vector<int> out(static_cast<std::size_t>(edge_count), 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (EdgeId e : levels[i].increment) out[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
  }
  return out;
}

int PrincipalSequence::level_for(int k) const {
  for (int j = 0; j <= level_count(); ++j) {
    if (kappa(j) >= k) return j;
  }
  throw std::out_of_range("k exceeds the number of vertices");
}

PrincipalSequence principal_sequence(const Graph& g) {
  PrincipalSequence psp;
  psp.base = components(g);
  VertexPartition current = psp.base;
  std::vector<EdgeId> current_cut;
  std::map<std::vector<VertexId>, StrengthResult> cache;  // keyed by part, local ids

  while (true) {
    bool any = false;
    Rational best;
    for (const auto& part : current.parts()) {
      if (part.size() < 2) continue;
      auto it = cache.find(part);
      if (it == cache.end()) {
        auto sub = induced_subgraph(g, part);
        it = cache.emplace(part, strength(sub.graph)).first;
      }
      if (!any || it->second.sigma < best) best = it->second.sigma;
      any = true;
    }
    if (!any) break;
    if (!psp.levels.empty() && best <= psp.levels.back().lambda) {
      throw std::logic_error("principal sequence: critical values not strictly increasing");
    }

    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
    int next_label = 0;
    for (const auto& part : current.parts()) {
      auto it = part.size() < 2 ? cache.end() : cache.find(part);
      if (it != cache.end() && it->second.sigma == best) {
        const auto& local = it->second.partition;
        for (std::size_t i = 0; i < part.size(); ++i) {
          labels[static_cast<std::size_t>(part[i])] = next_label + local.part_of(static_cast<VertexId>(i));
        }
        next_label += local.part_count();
      } else {
        for (VertexId v : part) labels[static_cast<std::size_t>(v)] = next_label;
        ++next_label;
      }
    }
    auto next = VertexPartition::from_labels(labels);
    psp.levels.push_back(make_level(g, current, current_cut, next, best));
    current_cut = psp.levels.back().cumulative;
    current = std::move(next);
  }
  return psp;
}

PrincipalSequence sequence_from_breakpoints(const Graph& g) {
  PrincipalSequence psp;
  psp.base = components(g);
  VertexPartition current = psp.base;
  std::vector<EdgeId> current_cut;
  for (auto& bp : breakpoints(g)) {
    psp.levels.push_back(make_level(g, current, current_cut, bp.after, bp.b));
    current_cut = psp.levels.back().cumulative;
    current = bp.after;
  }
  return psp;
}

}  // namespace kcut
