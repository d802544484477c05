#pragma once

#include <random>
#include <set>
#include <vector>

#include "circ/codes.hpp"
#include "oracle.hpp"

namespace testing {

inline oracle::Graph oracle_graph(const circ::CirculantGraph& g) {
  oracle::Graph out;
  out.n = static_cast<int>(g.order());
  for (auto d : g.offsets()) out.offsets.push_back(static_cast<int>(d));
  return out;
}

inline oracle::VSet to_oracle(const circ::VertexSet& s) {
  oracle::VSet out;
  s.for_each([&](circ::Vertex v) { out.insert(static_cast<int>(v)); });
  return out;
}

inline oracle::Kind to_oracle(circ::Kind k) { return static_cast<oracle::Kind>(static_cast<int>(k)); }

inline std::vector<circ::Vertex> vec(std::initializer_list<circ::Vertex> v) { return v; }

// Uniformly random subset with inclusion probability p.
inline circ::VertexSet random_subset(std::uint32_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  circ::VertexSet s(n);
  for (circ::Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

// Random set grown until every vertex is dominated.
inline circ::VertexSet random_dominating(const circ::CirculantGraph& g, std::mt19937_64& rng) {
  const auto n = g.order();
  auto s = random_subset(n, std::uniform_real_distribution<double>(0.05, 0.6)(rng), rng);
  std::vector<circ::Vertex> order(n);
  for (circ::Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (auto u : order) {
    if ((s & g.closed_neighborhood(u)).empty()) {
      const auto nb = g.closed_neighborhood(u).to_vector();
      s.insert(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
    }
  }
  return s;
}

inline const char* kind_name(circ::Kind k) { return circ::to_string(k); }

}  // namespace testing
