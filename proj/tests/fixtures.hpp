#pragma once

#include <random>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut::testing {

// Vertex names in comments use a..f for 0..5.
inline Graph e1() { return parse_graph_string("p kcut 2 1\ne 1 2 5\n"); }

inline Graph c5() {
  return parse_graph_string("p kcut 5 5\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 5 1 1\n");
}

// Triangles abc and def joined by the bridge c-d (edge id 6).
inline Graph tt() {
  return parse_graph_string(
      "p kcut 6 7\n"
      "e 1 2 1\ne 2 3 1\ne 1 3 1\n"
      "e 4 5 1\ne 5 6 1\ne 4 6 1\n"
      "e 3 4 1\n");
}

inline Graph k4() {
  return parse_graph_string("p kcut 4 6\ne 1 2 1\ne 1 3 1\ne 1 4 1\ne 2 3 1\ne 2 4 1\ne 3 4 1\n");
}

inline Graph p3() { return parse_graph_string("p kcut 3 2\ne 1 2 1\ne 2 3 1\n"); }

/// Connected simple graph on n vertices: a random spanning tree plus each
/// remaining pair with probability `density`; integer capacities 1..max_cap.
inline Graph random_connected(std::mt19937_64& rng, int n, double density, int max_cap = 9) {
  std::uniform_int_distribution<int> cap(1, max_cap);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    edges.push_back(Edge{u, v, Rational(cap(rng))});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      if (coin(rng) < density) edges.push_back(Edge{u, v, Rational(cap(rng))});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The fixed acceptance suite: five fixtures plus 50 seeded random
/// connected graphs with 2 <= n <= 7.
inline std::vector<NamedGraph> suite(int random_count = 50) {
  std::vector<NamedGraph> out{{"TT", tt()}, {"C5", c5()}, {"K4", k4()}, {"E1", e1()}, {"P3", p3()}};
  std::mt19937_64 rng(20260117);
  std::uniform_int_distribution<int> size(2, 7);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  for (int i = 0; i < random_count; ++i) {
    int n = size(rng);
    double d = density(rng);
    out.push_back({"R" + std::to_string(i) + "(n=" + std::to_string(n) + ")", random_connected(rng, n, d)});
  }
  return out;
}

/// Builds a partition from 1-based parts, as written in examples.
inline VertexPartition parts1(std::vector<std::vector<int>> parts, int n) {
  for (auto& p : parts) {
    for (auto& v : p) --v;
  }
  return VertexPartition::from_parts(std::move(parts), n);
}

}  // namespace kcut::testing
