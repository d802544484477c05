#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "circ/vertex_set.hpp"

namespace circ {

/// Circulant graph C(n; d_1, ..., d_k) on Z_n: x ~ y iff the circular
/// distance min(|x-y|, n-|x-y|) is one of the offsets.
///
/// Offsets satisfy 1 <= d < n/2, so the graph is simple and 2k-regular.
/// Immutable after construction; closed neighbourhoods are precomputed.
class CirculantGraph {
 public:
  // Closed neighbourhoods are stored densely, n^2/8 bytes in total.
  static constexpr std::int64_t kMaxOrder = 1 << 14;

  /// Throws OffsetOutOfRange (d <= 0 or 2d >= n), DuplicateOffset, or
  /// InvalidArgument (n < 3, no offsets).
  CirculantGraph(std::int64_t n, std::span<const std::int64_t> offsets);
  CirculantGraph(std::int64_t n, std::initializer_list<std::int64_t> offsets)
      : CirculantGraph(n, std::span<const std::int64_t>(offsets.begin(), offsets.size())) {}

  std::uint32_t order() const noexcept { return n_; }
  /// Sorted ascending.
  const std::vector<std::uint32_t>& offsets() const noexcept { return offsets_; }
  std::uint32_t max_offset() const noexcept { return offsets_.back(); }
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(2 * offsets_.size()); }
  std::uint64_t edge_count() const noexcept { return std::uint64_t{n_} * offsets_.size(); }

  bool adjacent(Vertex x, Vertex y) const;
  /// min(|x-y|, n-|x-y|).
  std::uint32_t circular_distance(Vertex x, Vertex y) const;

  /// N[u] = N(u) ∪ {u}. Throws VertexOutOfRange.
  const VertexSet& closed_neighborhood(Vertex u) const;
  /// Vertices at graph distance <= radius from u.
  VertexSet ball(Vertex u, std::uint32_t radius) const;

  /// True for offsets {1,3}: the graph family the structural bounds and
  /// table constructions are stated for.
  bool is_one_three() const noexcept;

 private:
  void check(Vertex u) const;

  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexSet> closed_;
};

using GraphPtr = std::shared_ptr<const CirculantGraph>;

GraphPtr make_circulant(std::int64_t n, std::span<const std::int64_t> offsets);
GraphPtr make_circulant(std::int64_t n, std::initializer_list<std::int64_t> offsets);

}  // namespace circ
