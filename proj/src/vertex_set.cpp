#include "circ/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "circ/error.hpp"

namespace circ {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe) {
  if (!is_inline()) heap_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  auto w = s.mutable_words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t lo = i * kWordBits;
    const std::size_t bits = std::min(kWordBits, universe - lo);
    w[i] = bits == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  return s;
}

std::span<const std::uint64_t> VertexSet::words() const noexcept {
  if (is_inline()) return {inline_.data(), word_count(universe_)};
  return {heap_.data(), heap_.size()};
}

std::span<std::uint64_t> VertexSet::mutable_words() noexcept {
  if (is_inline()) return {inline_.data(), word_count(universe_)};
  return {heap_.data(), heap_.size()};
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside Z_" +
                                            std::to_string(universe_));
  }
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(Errc::InvalidArgument, "vertex sets over different universes");
  }
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return (words()[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  mutable_words()[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check(v);
  mutable_words()[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words()) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words())
    if (w != 0) return false;
  return true;
}

Vertex VertexSet::min() const {
  auto w = words();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w[i]));
  throw Error(Errc::InvalidArgument, "min() of an empty vertex set");
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  auto mine = mutable_words();
  auto theirs = other.words();
  for (std::size_t i = 0; i < mine.size(); ++i) mine[i] &= theirs[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  auto mine = mutable_words();
  auto theirs = other.words();
  for (std::size_t i = 0; i < mine.size(); ++i) mine[i] |= theirs[i];
  return *this;
}

bool VertexSet::operator==(const VertexSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

VertexSet VertexSet::rotated(std::size_t shift) const {
  VertexSet out(universe_);
  if (universe_ == 0) return out;
  shift %= universe_;
  for_each([&](Vertex v) { out.insert(static_cast<Vertex>((v + shift) % universe_)); });
  return out;
}

VertexSet VertexSet::reflected() const {
  VertexSet out(universe_);
  for_each([&](Vertex v) { out.insert(static_cast<Vertex>((universe_ - v) % universe_)); });
  return out;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace circ
