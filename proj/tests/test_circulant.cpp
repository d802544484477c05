#include <doctest.h>

#include "circ/circulant.hpp"
#include "circ/error.hpp"
#include "support.hpp"

using circ::CirculantGraph;
using circ::Errc;
using circ::VertexSet;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const circ::Error& e) {
    return e.code();
  }
  FAIL("expected circ::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("building circulants") {
  const CirculantGraph g7(7, {1, 3});
  CHECK(g7.order() == 7);
  CHECK(g7.degree() == 4);
  CHECK(g7.is_one_three());
  for (circ::Vertex u = 0; u < 7; ++u) CHECK(g7.closed_neighborhood(u).size() == 5);

  const CirculantGraph g8(8, {3, 1});
  CHECK(g8.offsets() == std::vector<std::uint32_t>{1, 3});
  CHECK(g8.closed_neighborhood(0) == VertexSet(8, {0, 1, 7, 3, 5}));

  CHECK(CirculantGraph(14, {1, 3}).edge_count() == 28);
  CHECK(CirculantGraph(14, {1, 3}).edge_count() ==
        testing::oracle_graph(CirculantGraph(14, {1, 3})).edge_count());
  CHECK_FALSE(CirculantGraph(14, {1, 2}).is_one_three());
}

TEST_CASE("closed neighbourhoods") {
  CHECK(CirculantGraph(14, {1, 3}).closed_neighborhood(0) == VertexSet(14, {0, 1, 3, 11, 13}));
  CHECK(CirculantGraph(7, {1, 3}).closed_neighborhood(0) == VertexSet(7, {0, 1, 3, 4, 6}));
  CHECK(CirculantGraph(8, {1, 3}).closed_neighborhood(0) == VertexSet(8, {0, 1, 3, 5, 7}));
  CHECK(error_of([] { (void)CirculantGraph(8, {1, 3}).closed_neighborhood(8); }) ==
        Errc::VertexOutOfRange);
}

TEST_CASE("invalid circulants are rejected") {
  CHECK(error_of([] { CirculantGraph(8, {1, 4}); }) == Errc::OffsetOutOfRange);
  CHECK(error_of([] { CirculantGraph(6, {1, 3}); }) == Errc::OffsetOutOfRange);
  CHECK(error_of([] { CirculantGraph(8, {0, 1}); }) == Errc::OffsetOutOfRange);
  CHECK(error_of([] { CirculantGraph(8, {-1}); }) == Errc::OffsetOutOfRange);
  CHECK(error_of([] { CirculantGraph(8, {1, 1}); }) == Errc::DuplicateOffset);
  CHECK(error_of([] { CirculantGraph(8, {}); }) == Errc::InvalidArgument);
  CHECK(error_of([] { CirculantGraph(2, {1}); }) == Errc::InvalidArgument);
  CHECK(error_of([] { CirculantGraph(-5, {1}); }) == Errc::InvalidArgument);
}

TEST_CASE("balls") {
  const CirculantGraph g(14, {1, 3});
  CHECK(g.ball(0, 0) == VertexSet(14, {0}));
  CHECK(g.ball(0, 1) == g.closed_neighborhood(0));
  VertexSet expected = VertexSet::full(14);
  for (circ::Vertex v : {5u, 7u, 9u}) expected.erase(v);
  CHECK(g.ball(0, 2) == expected);
  CHECK(g.ball(0, 100) == VertexSet::full(14));
  CHECK(error_of([&] { (void)g.ball(14, 1); }) == Errc::VertexOutOfRange);
}

TEST_CASE("graph matches the brute-force oracle") {
  const std::vector<std::vector<std::int64_t>> offset_sets = {{1, 3}, {1, 2}, {2, 5}, {1, 4, 6}};
  for (const auto& offs : offset_sets) {
    for (std::int64_t n = 2 * offs.back() + 1; n <= 40; ++n) {
      CAPTURE(n);
      const CirculantGraph g(n, offs);
      const auto o = testing::oracle_graph(g);
      for (circ::Vertex u = 0; u < g.order(); ++u) {
        CHECK(testing::to_oracle(g.closed_neighborhood(u)) == o.closed(static_cast<int>(u)));
        for (std::uint32_t r = 0; r <= 3; ++r)
          CHECK(testing::to_oracle(g.ball(u, r)) == o.ball(static_cast<int>(u), static_cast<int>(r)));
        for (circ::Vertex v = 0; v < g.order(); ++v)
          CHECK(g.adjacent(u, v) == o.adjacent(static_cast<int>(u), static_cast<int>(v)));
      }
      CHECK(g.edge_count() == o.edge_count());
    }
  }
}

TEST_CASE("neighbourhood symmetry, rotation equivariance, ball monotonicity") {
  for (std::int64_t n = 7; n <= 60; ++n) {
    CAPTURE(n);
    const CirculantGraph g(n, {1, 3});
    for (circ::Vertex u = 0; u < g.order(); ++u) {
      CHECK(g.closed_neighborhood(u).size() == 5);
      g.closed_neighborhood(u).for_each([&](circ::Vertex v) {
        CHECK(g.closed_neighborhood(v).contains(u));
      });
      CHECK(g.closed_neighborhood((u + 1) % g.order()) == g.closed_neighborhood(u).rotated(1));
      CHECK_FALSE(g.adjacent(u, u));
      for (std::uint32_t r = 0; r < 6; ++r) CHECK(g.ball(u, r).is_subset_of(g.ball(u, r + 1)));
    }
  }
}

TEST_CASE("large orders use the general set representation") {
  const CirculantGraph g(301, {1, 3});
  CHECK(g.closed_neighborhood(300) == VertexSet(301, {300, 299, 0, 297, 2}));
  CHECK(g.ball(0, 200) == VertexSet::full(301));
}
