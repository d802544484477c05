#include "circ/circulant.hpp"

#include <algorithm>
#include <string>

#include "circ/error.hpp"

namespace circ {

CirculantGraph::CirculantGraph(std::int64_t n, std::span<const std::int64_t> offsets) {
  if (n < 3) throw Error(Errc::InvalidArgument, "circulant order must be >= 3");
  if (n > kMaxOrder) throw Error(Errc::InvalidArgument, "circulant order too large");
  if (offsets.empty()) throw Error(Errc::InvalidArgument, "offset set must be nonempty");
  for (auto d : offsets) {
    if (d <= 0 || 2 * d >= n) {
      throw Error(Errc::OffsetOutOfRange,
                  "offset " + std::to_string(d) + " not in [1, n/2) for n=" + std::to_string(n));
    }
  }
  std::vector<std::int64_t> sorted(offsets.begin(), offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DuplicateOffset, "duplicate offset");
  }

  n_ = static_cast<std::uint32_t>(n);
  for (auto d : sorted) offsets_.push_back(static_cast<std::uint32_t>(d));

  closed_.reserve(n_);
  for (Vertex u = 0; u < n_; ++u) {
    VertexSet nb(n_);
    nb.insert(u);
    for (auto d : offsets_) {
      nb.insert((u + d) % n_);
      nb.insert((u + n_ - d) % n_);
    }
    closed_.push_back(std::move(nb));
  }
}

void CirculantGraph::check(Vertex u) const {
  if (u >= n_) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(u) + " outside Z_" + std::to_string(n_));
  }
}

std::uint32_t CirculantGraph::circular_distance(Vertex x, Vertex y) const {
  check(x);
  check(y);
  const std::uint32_t diff = x > y ? x - y : y - x;
  return std::min(diff, n_ - diff);
}

bool CirculantGraph::adjacent(Vertex x, Vertex y) const {
  const auto dist = circular_distance(x, y);
  return std::binary_search(offsets_.begin(), offsets_.end(), dist);
}

const VertexSet& CirculantGraph::closed_neighborhood(Vertex u) const {
  check(u);
  return closed_[u];
}

VertexSet CirculantGraph::ball(Vertex u, std::uint32_t radius) const {
  check(u);
  VertexSet reached(n_);
  reached.insert(u);
  std::vector<Vertex> frontier{u};
  for (std::uint32_t step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      closed_[x].for_each([&](Vertex y) {
        if (!reached.contains(y)) {
          reached.insert(y);
          next.push_back(y);
        }
      });
    }
    frontier = std::move(next);
  }
  return reached;
}

bool CirculantGraph::is_one_three() const noexcept {
  return offsets_.size() == 2 && offsets_[0] == 1 && offsets_[1] == 3;
}

GraphPtr make_circulant(std::int64_t n, std::span<const std::int64_t> offsets) {
  return std::make_shared<const CirculantGraph>(n, offsets);
}

GraphPtr make_circulant(std::int64_t n, std::initializer_list<std::int64_t> offsets) {
  return std::make_shared<const CirculantGraph>(n, offsets);
}

}  // namespace circ
