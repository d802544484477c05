// Exercises the shared library through circcodes.h only.
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "capi.hpp"

extern "C" int circ_header_compiles_as_c(void);

using namespace circ_cli;

namespace {

std::vector<std::uint32_t> u32(std::initializer_list<std::uint32_t> v) { return v; }

Graph c13(std::int64_t n) { return make_graph(n, {1, 3}); }

}  // namespace

TEST_CASE("header is valid C") { CHECK(circ_header_compiles_as_c() == 1); }

TEST_CASE("strings") {
  CHECK(std::string(circ_version()) == "0.1.0");
  CHECK(std::string(circ_status_string(CIRC_E_NOT_IN_CODE)) == "not_in_code");
  CHECK(std::string(circ_kind_string(CIRC_LOCATING)) == "locating");
  CHECK(std::string(circ_validity_string(CIRC_NOT_IDENTIFYING)) == "not_identifying");
  CHECK(std::string(circ_outcome_string(CIRC_NONE_AT_SIZE)) == "none_at_size");
  circ_kind k{};
  CHECK(circ_parse_kind("identifying", &k) == CIRC_OK);
  CHECK(k == CIRC_IDENTIFYING);
  CHECK(circ_parse_kind("bogus", &k) == CIRC_E_INVALID_ARGUMENT);
  CHECK(std::string(circ_last_error()).find("bogus") != std::string::npos);
  CHECK(circ_parse_kind(nullptr, &k) == CIRC_E_NULL_ARGUMENT);
}

TEST_CASE("graph handles") {
  auto g = c13(14);
  CHECK(circ_graph_order(g.get()) == 14);
  CHECK(circ_graph_degree(g.get()) == 4);
  CHECK(circ_graph_edge_count(g.get()) == 28);
  const auto nb = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_graph_closed_neighborhood(g.get(), 0, b, c, n);
  });
  CHECK(nb == u32({0, 1, 3, 11, 13}));
  const auto offs = fetch<std::int64_t>([&](std::int64_t* b, size_t c, size_t* n) {
    return circ_graph_offsets(g.get(), b, c, n);
  });
  CHECK(offs == std::vector<std::int64_t>{1, 3});
  int adj = -1;
  CHECK(circ_graph_adjacent(g.get(), 0, 11, &adj) == CIRC_OK);
  CHECK(adj == 1);
  CHECK(circ_graph_adjacent(g.get(), 0, 14, &adj) == CIRC_E_VERTEX_OUT_OF_RANGE);
  const auto ball = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_graph_ball(g.get(), 0, 2, b, c, n);
  });
  CHECK(ball.size() == 11);

  circ_graph* out = nullptr;
  const std::int64_t bad[] = {1, 4};
  CHECK(circ_graph_create(8, bad, 2, &out) == CIRC_E_OFFSET_OUT_OF_RANGE);
  CHECK(out == nullptr);
  const std::int64_t dup[] = {1, 1};
  CHECK(circ_graph_create(8, dup, 2, &out) == CIRC_E_DUPLICATE_OFFSET);
  CHECK(circ_graph_create(8, bad, 2, nullptr) == CIRC_E_NULL_ARGUMENT);
  CHECK(circ_graph_create(8, nullptr, 2, &out) == CIRC_E_NULL_ARGUMENT);
  circ_graph_free(nullptr);
}

TEST_CASE("buffer protocol") {
  auto g = c13(14);
  std::uint32_t buf[2];
  size_t count = 0;
  CHECK(circ_graph_closed_neighborhood(g.get(), 0, buf, 2, &count) == CIRC_E_BUFFER_TOO_SMALL);
  CHECK(count == 5);
  std::uint32_t full[5];
  CHECK(circ_graph_closed_neighborhood(g.get(), 0, full, 5, &count) == CIRC_OK);
  CHECK(count == 5);
  CHECK(circ_graph_closed_neighborhood(g.get(), 0, full, 5, nullptr) == CIRC_E_NULL_ARGUMENT);
}

TEST_CASE("codes through the C API") {
  auto g = c13(11);
  auto code = make_code(g.get(), {0, 4, 5, 6});
  CHECK(circ_code_size(code.get()) == 4);
  CHECK(circ_code_order(code.get()) == 11);
  CHECK(members_of(code.get()) == u32({0, 4, 5, 6}));

  circ_verification v{};
  CHECK(circ_code_verify(code.get(), CIRC_IDENTIFYING, &v) == CIRC_OK);
  CHECK(v.status == CIRC_NOT_IDENTIFYING);
  CHECK(v.witness == CIRC_WITNESS_PAIR);
  CHECK(v.first == 0);
  CHECK(v.second == 10);
  CHECK(circ_code_verify(code.get(), CIRC_LOCATING, &v) == CIRC_OK);
  CHECK(v.status == CIRC_VALID);
  CHECK(v.witness == CIRC_WITNESS_NONE);

  const auto sh = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_code_shadow(code.get(), 1, b, c, n);
  });
  CHECK(sh == u32({0, 4}));
  const auto sh2 = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_code_shadow(code.get(), 2, b, c, n);
  });
  CHECK(sh2 == u32({5}));

  circ_rational r{};
  CHECK(circ_code_sum_of_shares(code.get(), &r) == CIRC_OK);
  CHECK(r.num == 11);
  CHECK(r.den == 1);
  CHECK(circ_code_share(code.get(), 1, &r) == CIRC_E_NOT_IN_CODE);
  CHECK(circ_code_share(code.get(), -1, &r) == CIRC_E_VERTEX_OUT_OF_RANGE);
  CHECK(circ_code_share(code.get(), 11, &r) == CIRC_E_VERTEX_OUT_OF_RANGE);

  auto g7 = c13(7);
  auto lone = make_code(g7.get(), {0});
  CHECK(circ_code_verify(lone.get(), CIRC_DOMINATING, &v) == CIRC_OK);
  CHECK(v.witness == CIRC_WITNESS_VERTEX);
  CHECK(v.first == 2);
  CHECK(circ_code_sum_of_shares(lone.get(), &r) == CIRC_E_SHARE_UNDEFINED);

  circ_code* out = nullptr;
  const std::int64_t outside[] = {0, 11};
  CHECK(circ_code_create(g.get(), outside, 2, &out) == CIRC_E_VERTEX_OUT_OF_RANGE);
  const std::int64_t negative[] = {-1};
  CHECK(circ_code_create(g.get(), negative, 1, &out) == CIRC_E_VERTEX_OUT_OF_RANGE);
  CHECK(circ_code_create(g.get(), nullptr, 0, &out) == CIRC_OK);
  CHECK(circ_code_size(out) == 0);
  circ_code_free(out);
}

TEST_CASE("shares, profiles and heavy vertices through the C API") {
  auto g = c13(22);
  auto code = make_code(g.get(), {0, 1, 7, 8, 11, 12, 18, 19});
  circ_rational thr{};
  CHECK(circ_heavy_threshold(CIRC_IDENTIFYING, &thr) == CIRC_OK);
  CHECK(thr.num == 11);
  CHECK(thr.den == 4);
  CHECK(circ_heavy_threshold(CIRC_DOMINATING, &thr) == CIRC_E_INVALID_ARGUMENT);
  thr = {11, 4};
  const auto heavy = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_code_heavy_vertices(code.get(), thr, b, c, n);
  });
  CHECK(heavy == u32({1, 7, 12, 18}));
  const auto prof = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_code_profile(code.get(), 1, b, c, n);
  });
  CHECK(prof == u32({1, 2, 2, 2, 3}));
  circ_rational share{};
  CHECK(circ_code_share(code.get(), 1, &share) == CIRC_OK);
  CHECK(share.num == 17);
  CHECK(share.den == 6);
  const auto viol = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_code_heavy_profile_violations(code.get(), CIRC_IDENTIFYING, b, c, n);
  });
  CHECK(viol.empty());
  circ_rational zero_den{1, 0};
  size_t count = 0;
  CHECK(circ_code_heavy_vertices(code.get(), zero_den, nullptr, 0, &count) == CIRC_E_INVALID_ARGUMENT);
}

TEST_CASE("constructions through the C API") {
  circ_code* code = nullptr;
  CHECK(circ_construct(18, CIRC_LOCATING, &code) == CIRC_OK);
  CodePtr owned(code);
  CHECK(members_of(code) == u32({0, 1, 6, 7, 12, 13}));
  circ_code* none = nullptr;
  CHECK(circ_construct(12, CIRC_LOCATING, &none) == CIRC_E_UNSUPPORTED_ORDER);
  CHECK(none == nullptr);
  CHECK(circ_construct(30, CIRC_DOMINATING, &none) == CIRC_E_INVALID_ARGUMENT);

  const auto a = fetch<std::uint32_t>([](std::uint32_t* b, size_t c, size_t* n) {
    return circ_construct_a(2, b, c, n);
  });
  CHECK(a == u32({0, 1, 6, 7}));
  const auto b = fetch<std::uint32_t>([](std::uint32_t* buf, size_t c, size_t* n) {
    return circ_construct_b(1, buf, c, n);
  });
  CHECK(b == u32({0, 1, 7, 8}));

  std::uint32_t v = 0;
  CHECK(circ_construction_min_order(CIRC_IDENTIFYING, &v) == CIRC_OK);
  CHECK(v == 11);
  CHECK(circ_target_size(19, CIRC_IDENTIFYING, &v) == CIRC_OK);
  CHECK(v == 8);

  circ_bound_report br{};
  CHECK(circ_lower_bound(14, CIRC_LOCATING, &br) == CIRC_OK);
  CHECK(br.effective == 5);
  CHECK(br.has_structural_bound == 1);
  CHECK(circ_lower_bound(7, CIRC_LOCATING, &br) == CIRC_OK);
  CHECK(br.effective == 2);
  CHECK(br.has_structural_bound == 0);
  auto g = make_graph(20, {1, 2});
  CHECK(circ_graph_lower_bound(g.get(), CIRC_IDENTIFYING, &br) == CIRC_OK);
  CHECK(br.effective == 7);
}

TEST_CASE("periodic codes through the C API") {
  const std::int64_t a[] = {0, 1};
  circ_rational d{};
  CHECK(circ_periodic_density(6, a, 2, &d) == CIRC_OK);
  CHECK(d.num == 1);
  CHECK(d.den == 3);
  circ_periodic_verification pv{};
  CHECK(circ_periodic_verify(6, a, 2, CIRC_LOCATING, nullptr, 0, &pv) == CIRC_OK);
  CHECK(pv.status == CIRC_VALID);

  const std::int64_t literal[] = {0, 4, 5, 6};
  CHECK(circ_periodic_verify(11, literal, 4, CIRC_IDENTIFYING, nullptr, 0, &pv) == CIRC_OK);
  CHECK(pv.status == CIRC_NOT_IDENTIFYING);
  CHECK(pv.witness == CIRC_WITNESS_PAIR);
  CHECK(pv.first == 10);
  CHECK(pv.second == 11);

  const std::uint32_t offs[] = {1, 2};
  const std::int64_t third[] = {0};
  CHECK(circ_periodic_verify(3, third, 1, CIRC_DOMINATING, offs, 2, &pv) == CIRC_OK);
  CHECK(pv.status == CIRC_VALID);
  const std::int64_t bad[] = {6};
  CHECK(circ_periodic_density(6, bad, 1, &d) == CIRC_E_INVALID_ARGUMENT);
}

namespace {

struct ProgressLog {
  int calls = 0;
};

void on_progress(const circ_search_progress* p, void* user) {
  auto* log = static_cast<ProgressLog*>(user);
  ++log->calls;
  CHECK(p->nodes > 0);
}

}  // namespace

TEST_CASE("search through the C API") {
  auto g = c13(12);
  circ_search_result* raw = nullptr;
  CHECK(circ_search_min(g.get(), CIRC_LOCATING, nullptr, &raw) == CIRC_OK);
  Result r(raw);
  CHECK(circ_result_outcome(r.get()) == CIRC_OPTIMUM);
  CHECK(circ_result_kind(r.get()) == CIRC_LOCATING);
  CHECK(circ_result_order(r.get()) == 12);
  CHECK(circ_result_size(r.get()) == 5);
  circ_code* cert = nullptr;
  CHECK(circ_result_certificate(r.get(), &cert) == CIRC_OK);
  CodePtr owned(cert);
  CHECK(members_of(cert) == u32({0, 1, 2, 3, 7}));
  const auto refuted = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_result_refuted_sizes(r.get(), b, c, n);
  });
  CHECK(refuted == u32({4}));
  circ_search_stats st{};
  CHECK(circ_result_stats(r.get(), &st) == CIRC_OK);
  CHECK(st.nodes > 0);

  auto g19 = c13(19);
  CHECK(circ_search_exists(g19.get(), CIRC_IDENTIFYING, 7, nullptr, &raw) == CIRC_OK);
  Result none(raw);
  CHECK(circ_result_outcome(none.get()) == CIRC_NONE_AT_SIZE);
  CHECK(circ_result_certificate(none.get(), &cert) == CIRC_OK);
  CHECK(cert == nullptr);

  circ_search_config cfg;
  circ_search_config_init(&cfg);
  CHECK(cfg.threads == 1);
  CHECK(cfg.max_order_locating == 38);
  CHECK(cfg.max_order_identifying == 33);
  ProgressLog log;
  cfg.progress = on_progress;
  cfg.progress_user_data = &log;
  cfg.progress_interval = 256;
  cfg.threads = 2;
  auto g20 = c13(20);
  CHECK(circ_search_exists(g20.get(), CIRC_LOCATING, 8, &cfg, &raw) == CIRC_OK);
  Result found(raw);
  CHECK(circ_result_outcome(found.get()) == CIRC_FOUND);
  CHECK(log.calls > 0);

  cfg.progress = nullptr;
  cfg.node_budget = 100;
  auto g30 = c13(30);
  CHECK(circ_search_min(g30.get(), CIRC_IDENTIFYING, &cfg, &raw) == CIRC_OK);
  Result budget(raw);
  CHECK(circ_result_outcome(budget.get()) == CIRC_BUDGET_EXCEEDED);
  circ_bound_report br{};
  CHECK(circ_result_bounds(budget.get(), &br) == CIRC_OK);
  CHECK(br.effective == 11);

  CHECK(circ_search_exists(g.get(), CIRC_LOCATING, 0, nullptr, &raw) == CIRC_E_INVALID_ARGUMENT);
  CHECK(raw == nullptr);
  auto big = c13(65);
  CHECK(circ_search_exists(big.get(), CIRC_LOCATING, 22, nullptr, &raw) == CIRC_E_UNSUPPORTED_ORDER);
  auto g17 = c13(17);
  CHECK(circ_search_naive(g17.get(), CIRC_LOCATING, &raw) == CIRC_E_ORACLE_TOO_LARGE);
  CHECK(circ_search_naive(g.get(), CIRC_LOCATING, &raw) == CIRC_OK);
  Result naive(raw);
  CHECK(circ_result_size(naive.get()) == 5);
}

TEST_CASE("canonical form through the C API") {
  auto g = c13(8);
  auto code = make_code(g.get(), {0, 2, 3});
  const auto rot = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_canonical_form(code.get(), 0, b, c, n);
  });
  CHECK(rot == u32({0, 1, 6}));
  const auto dih = fetch<std::uint32_t>([&](std::uint32_t* b, size_t c, size_t* n) {
    return circ_canonical_form(code.get(), 1, b, c, n);
  });
  CHECK(dih == u32({0, 1, 3}));
}

TEST_CASE("last error is per call") {
  circ_kind k{};
  CHECK(circ_parse_kind("nope", &k) != CIRC_OK);
  CHECK(std::strlen(circ_last_error()) > 0);
  CHECK(circ_parse_kind("locating", &k) == CIRC_OK);
  CHECK(std::string(circ_last_error()).empty());
}
