#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace circ {

using Vertex = std::uint32_t;

/// Subset of Z_n stored as a bitmask.
///
/// Universes of up to kInlineVertices elements live in a fixed inline array of
/// words; larger universes spill into a heap vector. Both layouts expose the
/// same word view, so every operation has identical semantics either way.
/// Bits at positions >= universe() are always zero.
class VertexSet {
 public:
  static constexpr std::size_t kInlineVertices = 128;
  static constexpr std::size_t kWordBits = 64;

  explicit VertexSet(std::size_t universe = 0);
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool is_inline() const noexcept { return universe_ <= kInlineVertices; }

  /// Throws VertexOutOfRange for v >= universe().
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  Vertex min() const;  // requires !empty()

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  bool operator==(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const;

  /// Image under x -> x + shift (mod universe).
  VertexSet rotated(std::size_t shift) const;
  /// Image under x -> -x (mod universe).
  VertexSet reflected() const;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;  // "{0,4,5,6}"

  std::span<const std::uint64_t> words() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits != 0) {
        f(static_cast<Vertex>(i * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::span<std::uint64_t> mutable_words() noexcept;
  void check(Vertex v) const;
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_;
  std::array<std::uint64_t, kInlineVertices / kWordBits> inline_{};
  std::vector<std::uint64_t> heap_;
};

}  // namespace circ
