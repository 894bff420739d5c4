#include "kcut/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace kcut {

VertexPartition VertexPartition::from_labels(std::span<const int> labels) {
  VertexPartition p;
  const auto n = labels.size();
  p.part_of_.assign(n, -1);
  // First occurrence order of labels equals order by minimum element.
  std::unordered_map<int, int> remap;  // label -> canonical index
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = remap.try_emplace(labels[v], static_cast<int>(remap.size()));
    int idx = it->second;
    if (inserted) p.parts_.emplace_back();
    p.part_of_[v] = idx;
    p.parts_[static_cast<std::size_t>(idx)].push_back(static_cast<VertexId>(v));
  }
  return p;
}

VertexPartition VertexPartition::from_parts(std::vector<std::vector<VertexId>> parts, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("partition has an empty part");
    for (VertexId v : parts[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      if (labels[static_cast<std::size_t>(v)] != -1) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two parts");
      }
      labels[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
  return from_labels(labels);
}

VertexPartition VertexPartition::whole(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  return from_labels(labels);
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;
  return from_labels(labels);
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) return false;
  for (const auto& part : parts_) {
    int target = coarser.part_of(part.front());
    for (VertexId v : part) {
      if (coarser.part_of(v) != target) return false;
    }
  }
  return true;
}

std::size_t PartitionHash::operator()(const VertexPartition& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int label : p.labels()) {
    h ^= static_cast<std::size_t>(label) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kcut
