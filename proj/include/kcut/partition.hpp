#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace kcut {

using VertexId = int;

/// A set partition of {0, ..., n-1} kept in canonical form: each part is
/// sorted ascending and parts are ordered by their minimum element. Two
/// partitions are equal iff they have the same parts.
class VertexPartition {
 public:
  VertexPartition() = default;

  /// Builds from a label per vertex; equal labels share a part.
  static VertexPartition from_labels(std::span<const int> labels);
  /// Builds from explicit parts. Throws std::invalid_argument unless the
  /// parts are nonempty, disjoint and cover 0..n-1.
  static VertexPartition from_parts(std::vector<std::vector<VertexId>> parts, int n);

  static VertexPartition whole(int n);
  static VertexPartition singletons(int n);

  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int vertex_count() const { return static_cast<int>(part_of_.size()); }
  /// Index (in canonical order) of the part holding `v`.
  int part_of(VertexId v) const { return part_of_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return part_of_; }

  /// True when every part of *this lies inside a part of `coarser`.
  bool refines(const VertexPartition& coarser) const;

  bool operator==(const VertexPartition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const VertexPartition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<std::vector<VertexId>> parts_;
  std::vector<int> part_of_;
};

/// Restricted-growth encoding, used as a hash key by enumeration code.
struct PartitionHash {
  std::size_t operator()(const VertexPartition& p) const noexcept;
};

}  // namespace kcut
