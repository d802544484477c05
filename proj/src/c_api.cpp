#include "circcodes.h"

#include <algorithm>
#include <new>
#include <string>
#include <vector>

#include "circ/constructions.hpp"
#include "circ/error.hpp"
#include "circ/search.hpp"

struct circ_graph {
  circ::GraphPtr graph;
};

struct circ_code {
  circ::Code code;
};

struct circ_search_result {
  circ::SearchResult result;
};

namespace {

thread_local std::string last_error;

circ_status from_errc(circ::Errc code) {
  switch (code) {
    case circ::Errc::InvalidArgument: return CIRC_E_INVALID_ARGUMENT;
    case circ::Errc::OffsetOutOfRange: return CIRC_E_OFFSET_OUT_OF_RANGE;
    case circ::Errc::DuplicateOffset: return CIRC_E_DUPLICATE_OFFSET;
    case circ::Errc::VertexOutOfRange: return CIRC_E_VERTEX_OUT_OF_RANGE;
    case circ::Errc::ShareUndefined: return CIRC_E_SHARE_UNDEFINED;
    case circ::Errc::NotInCode: return CIRC_E_NOT_IN_CODE;
    case circ::Errc::UnsupportedOrder: return CIRC_E_UNSUPPORTED_ORDER;
    case circ::Errc::OracleTooLarge: return CIRC_E_ORACLE_TOO_LARGE;
    case circ::Errc::Overflow: return CIRC_E_OVERFLOW;
  }
  return CIRC_E_INTERNAL;
}

circ_status fail(circ_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
circ_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const circ::Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CIRC_E_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CIRC_E_INTERNAL, e.what());
  } catch (...) {
    return fail(CIRC_E_INTERNAL, "unknown error");
  }
}

circ_status null_arg(const char* name) {
  return fail(CIRC_E_NULL_ARGUMENT, std::string(name) + " must not be null");
}

template <class T, class Range>
circ_status copy_out(const Range& values, T* buf, size_t cap, size_t* count) {
  if (!count) return null_arg("count");
  *count = values.size();
  if (cap < values.size()) {
    return fail(CIRC_E_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + " of " +
                                             std::to_string(values.size()) + " entries");
  }
  if (!values.empty() && !buf) return null_arg("buf");
  std::copy(values.begin(), values.end(), buf);
  return CIRC_OK;
}

circ::Kind to_kind(circ_kind kind) {
  switch (kind) {
    case CIRC_DOMINATING: return circ::Kind::Dominating;
    case CIRC_LOCATING: return circ::Kind::Locating;
    case CIRC_IDENTIFYING: return circ::Kind::Identifying;
  }
  throw circ::Error(circ::Errc::InvalidArgument, "unknown kind " + std::to_string(int(kind)));
}

circ_kind from_kind(circ::Kind kind) {
  switch (kind) {
    case circ::Kind::Dominating: return CIRC_DOMINATING;
    case circ::Kind::Locating: return CIRC_LOCATING;
    case circ::Kind::Identifying: return CIRC_IDENTIFYING;
  }
  return CIRC_DOMINATING;
}

circ_validity from_status(circ::Status status) {
  switch (status) {
    case circ::Status::Valid: return CIRC_VALID;
    case circ::Status::NotDominating: return CIRC_NOT_DOMINATING;
    case circ::Status::NotLocating: return CIRC_NOT_LOCATING;
    case circ::Status::NotIdentifying: return CIRC_NOT_IDENTIFYING;
  }
  return CIRC_VALID;
}

circ_outcome from_outcome(circ::SearchOutcome outcome) {
  switch (outcome) {
    case circ::SearchOutcome::Optimum: return CIRC_OPTIMUM;
    case circ::SearchOutcome::Found: return CIRC_FOUND;
    case circ::SearchOutcome::NoneAtSize: return CIRC_NONE_AT_SIZE;
    case circ::SearchOutcome::NoCode: return CIRC_NO_CODE;
    case circ::SearchOutcome::BudgetExceeded: return CIRC_BUDGET_EXCEEDED;
  }
  return CIRC_BUDGET_EXCEEDED;
}

circ_rational to_c(const circ::Rational& r) { return {r.numerator(), r.denominator()}; }

circ_bound_report to_c(const circ::BoundReport& b) {
  circ_bound_report out{};
  out.general_bound = b.general_bound;
  out.has_structural_bound = b.structural_bound.has_value() ? 1 : 0;
  out.structural_bound = b.structural_bound.value_or(0);
  out.effective = b.effective;
  return out;
}

// Public vertex arguments are signed so negatives can be rejected, not wrapped.
circ::Vertex to_vertex(int64_t v, std::uint32_t n) {
  if (v < 0 || v >= n) {
    throw circ::Error(circ::Errc::VertexOutOfRange,
                      "vertex " + std::to_string(v) + " outside Z_" + std::to_string(n));
  }
  return static_cast<circ::Vertex>(v);
}

circ::SearchConfig to_config(const circ_search_config* c) {
  circ::SearchConfig config;
  if (!c) return config;
  config.threads = c->threads;
  config.dihedral = c->dihedral != 0;
  config.node_budget = c->node_budget;
  config.max_order_dominating = c->max_order_dominating;
  config.max_order_locating = c->max_order_locating;
  config.max_order_identifying = c->max_order_identifying;
  if (c->progress_interval != 0) config.progress_interval = c->progress_interval;
  if (c->progress) {
    auto fn = c->progress;
    void* user = c->progress_user_data;
    config.progress = [fn, user](const circ::SearchProgress& p) {
      const circ_search_progress cp{p.size, p.nodes, p.candidates, p.elapsed_seconds};
      fn(&cp, user);
    };
  }
  return config;
}

circ_status store_result(circ::SearchResult&& result, circ_search_result** out) {
  *out = new circ_search_result{std::move(result)};
  return CIRC_OK;
}

std::vector<std::int64_t> residues_of(const int64_t* residues, size_t count) {
  if (count && !residues) throw circ::Error(circ::Errc::InvalidArgument, "residues is null");
  return std::vector<std::int64_t>(residues, residues + count);
}

}  // namespace

extern "C" {

const char* circ_version(void) { return "0.1.0"; }

const char* circ_last_error(void) { return last_error.c_str(); }

const char* circ_status_string(circ_status status) {
  switch (status) {
    case CIRC_OK: return "ok";
    case CIRC_E_INVALID_ARGUMENT: return "invalid_argument";
    case CIRC_E_OFFSET_OUT_OF_RANGE: return "offset_out_of_range";
    case CIRC_E_DUPLICATE_OFFSET: return "duplicate_offset";
    case CIRC_E_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
    case CIRC_E_SHARE_UNDEFINED: return "share_undefined";
    case CIRC_E_NOT_IN_CODE: return "not_in_code";
    case CIRC_E_UNSUPPORTED_ORDER: return "unsupported_order";
    case CIRC_E_ORACLE_TOO_LARGE: return "oracle_too_large";
    case CIRC_E_OVERFLOW: return "overflow";
    case CIRC_E_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CIRC_E_NULL_ARGUMENT: return "null_argument";
    case CIRC_E_NO_MEMORY: return "no_memory";
    case CIRC_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* circ_kind_string(circ_kind kind) {
  switch (kind) {
    case CIRC_DOMINATING: return "dominating";
    case CIRC_LOCATING: return "locating";
    case CIRC_IDENTIFYING: return "identifying";
  }
  return "unknown";
}

const char* circ_validity_string(circ_validity status) {
  switch (status) {
    case CIRC_VALID: return "valid";
    case CIRC_NOT_DOMINATING: return "not_dominating";
    case CIRC_NOT_LOCATING: return "not_locating";
    case CIRC_NOT_IDENTIFYING: return "not_identifying";
  }
  return "unknown";
}

const char* circ_outcome_string(circ_outcome outcome) {
  switch (outcome) {
    case CIRC_OPTIMUM: return "optimum";
    case CIRC_FOUND: return "found";
    case CIRC_NONE_AT_SIZE: return "none_at_size";
    case CIRC_NO_CODE: return "no_code";
    case CIRC_BUDGET_EXCEEDED: return "budget_exceeded";
  }
  return "unknown";
}

circ_status circ_parse_kind(const char* text, circ_kind* out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = from_kind(circ::parse_kind(text));
    return CIRC_OK;
  });
}

circ_status circ_graph_create(int64_t n, const int64_t* offsets, size_t count, circ_graph** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (count && !offsets) return null_arg("offsets");
  return guard([&] {
    auto g = circ::make_circulant(n, std::span<const std::int64_t>(offsets, count));
    *out = new circ_graph{std::move(g)};
    return CIRC_OK;
  });
}

void circ_graph_free(circ_graph* graph) { delete graph; }

uint32_t circ_graph_order(const circ_graph* graph) { return graph ? graph->graph->order() : 0; }

uint32_t circ_graph_degree(const circ_graph* graph) { return graph ? graph->graph->degree() : 0; }

uint64_t circ_graph_edge_count(const circ_graph* graph) {
  return graph ? graph->graph->edge_count() : 0;
}

circ_status circ_graph_offsets(const circ_graph* graph, int64_t* buf, size_t cap, size_t* count) {
  if (!graph) return null_arg("graph");
  const auto& offs = graph->graph->offsets();
  std::vector<int64_t> values(offs.begin(), offs.end());
  return copy_out(values, buf, cap, count);
}

circ_status circ_graph_adjacent(const circ_graph* graph, int64_t u, int64_t v, int* out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto n = graph->graph->order();
    *out = graph->graph->adjacent(to_vertex(u, n), to_vertex(v, n)) ? 1 : 0;
    return CIRC_OK;
  });
}

circ_status circ_graph_closed_neighborhood(const circ_graph* graph, int64_t u, uint32_t* buf,
                                           size_t cap, size_t* count) {
  if (!graph) return null_arg("graph");
  return guard([&] {
    const auto& g = *graph->graph;
    return copy_out(g.closed_neighborhood(to_vertex(u, g.order())).to_vector(), buf, cap, count);
  });
}

circ_status circ_graph_ball(const circ_graph* graph, int64_t u, int64_t r, uint32_t* buf,
                           size_t cap, size_t* count) {
  if (!graph) return null_arg("graph");
  return guard([&] {
    if (r < 0) return fail(CIRC_E_INVALID_ARGUMENT, "radius must be nonnegative");
    const auto& g = *graph->graph;
    const auto radius = static_cast<std::uint32_t>(std::min<int64_t>(r, g.order()));
    return copy_out(g.ball(to_vertex(u, g.order()), radius).to_vector(), buf, cap, count);
  });
}

circ_status circ_code_create(const circ_graph* graph, const int64_t* members, size_t count,
                             circ_code** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!graph) return null_arg("graph");
  if (count && !members) return null_arg("members");
  return guard([&] {
    const auto n = graph->graph->order();
    circ::VertexSet set(n);
    for (size_t i = 0; i < count; ++i) set.insert(to_vertex(members[i], n));
    *out = new circ_code{circ::Code(graph->graph, std::move(set))};
    return CIRC_OK;
  });
}

void circ_code_free(circ_code* code) { delete code; }

size_t circ_code_size(const circ_code* code) { return code ? code->code.size() : 0; }

uint32_t circ_code_order(const circ_code* code) {
  return code ? code->code.graph().order() : 0;
}

circ_status circ_code_members(const circ_code* code, uint32_t* buf, size_t cap, size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] { return copy_out(code->code.members().to_vector(), buf, cap, count); });
}

circ_status circ_code_verify(const circ_code* code, circ_kind kind, circ_verification* out) {
  if (!code) return null_arg("code");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto r = circ::verify(code->code, to_kind(kind));
    *out = circ_verification{from_status(r.status), CIRC_WITNESS_NONE, 0, 0};
    if (const auto* v = std::get_if<circ::Vertex>(&r.witness)) {
      out->witness = CIRC_WITNESS_VERTEX;
      out->first = *v;
    } else if (const auto* p = std::get_if<circ::VertexPair>(&r.witness)) {
      out->witness = CIRC_WITNESS_PAIR;
      out->first = p->first;
      out->second = p->second;
    }
    return CIRC_OK;
  });
}

circ_status circ_code_shadow(const circ_code* code, int64_t u, uint32_t* buf, size_t cap,
                             size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] {
    const auto s = circ::shadow(code->code, to_vertex(u, code->code.graph().order()));
    return copy_out(s.members.to_vector(), buf, cap, count);
  });
}

circ_status circ_code_profile(const circ_code* code, int64_t u, uint32_t* buf, size_t cap,
                              size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] {
    const auto p = circ::profile(code->code, to_vertex(u, code->code.graph().order()));
    return copy_out(p.entries, buf, cap, count);
  });
}

circ_status circ_code_share(const circ_code* code, int64_t u, circ_rational* out) {
  if (!code) return null_arg("code");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = to_c(circ::share(code->code, to_vertex(u, code->code.graph().order())));
    return CIRC_OK;
  });
}

circ_status circ_code_sum_of_shares(const circ_code* code, circ_rational* out) {
  if (!code) return null_arg("code");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = to_c(circ::sum_of_shares(code->code));
    return CIRC_OK;
  });
}

circ_status circ_code_heavy_vertices(const circ_code* code, circ_rational threshold, uint32_t* buf,
                                     size_t cap, size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] {
    const circ::Rational t(threshold.num, threshold.den);
    return copy_out(circ::heavy_vertices(code->code, t), buf, cap, count);
  });
}

circ_status circ_code_heavy_profile_violations(const circ_code* code, circ_kind kind,
                                               uint32_t* buf, size_t cap, size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] {
    return copy_out(circ::heavy_profile_violations(code->code, to_kind(kind)), buf, cap, count);
  });
}

circ_status circ_heavy_threshold(circ_kind kind, circ_rational* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = to_c(circ::heavy_threshold(to_kind(kind)));
    return CIRC_OK;
  });
}

circ_status circ_canonical_form(const circ_code* code, int dihedral, uint32_t* buf, size_t cap,
                                size_t* count) {
  if (!code) return null_arg("code");
  return guard([&] {
    return copy_out(circ::canonical_form(code->code.members(), dihedral != 0).to_vector(), buf,
                    cap, count);
  });
}

circ_status circ_construct(uint32_t n, circ_kind kind, circ_code** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const auto k = to_kind(kind);
    if (k == circ::Kind::Dominating) {
      return fail(CIRC_E_INVALID_ARGUMENT, "no construction table for dominating sets");
    }
    auto code = k == circ::Kind::Locating ? circ::locating_code_for(n)
                                          : circ::identifying_code_for(n);
    *out = new circ_code{std::move(code)};
    return CIRC_OK;
  });
}

circ_status circ_construct_a(uint32_t t, uint32_t* buf, size_t cap, size_t* count) {
  return guard([&] { return copy_out(circ::construct_a(t).to_vector(), buf, cap, count); });
}

circ_status circ_construct_b(uint32_t t, uint32_t* buf, size_t cap, size_t* count) {
  return guard([&] { return copy_out(circ::construct_b(t).to_vector(), buf, cap, count); });
}

circ_status circ_construction_min_order(circ_kind kind, uint32_t* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = circ::table_for(to_kind(kind)).min_order();
    return CIRC_OK;
  });
}

circ_status circ_target_size(uint32_t n, circ_kind kind, uint32_t* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = circ::target_size(n, to_kind(kind));
    return CIRC_OK;
  });
}

circ_status circ_lower_bound(uint32_t n, circ_kind kind, circ_bound_report* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = to_c(circ::lower_bound(n, to_kind(kind)));
    return CIRC_OK;
  });
}

circ_status circ_graph_lower_bound(const circ_graph* graph, circ_kind kind,
                                   circ_bound_report* out) {
  if (!graph) return null_arg("graph");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = to_c(circ::lower_bound(*graph->graph, to_kind(kind)));
    return CIRC_OK;
  });
}

circ_status circ_periodic_density(uint32_t period, const int64_t* residues, size_t count,
                                  circ_rational* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    const auto r = residues_of(residues, count);
    *out = to_c(circ::density(circ::PeriodicCode(period, r)));
    return CIRC_OK;
  });
}

circ_status circ_periodic_verify(uint32_t period, const int64_t* residues, size_t count,
                                 circ_kind kind, const uint32_t* offsets, size_t offset_count,
                                 circ_periodic_verification* out) {
  if (!out) return null_arg("out");
  if (offset_count && !offsets) return null_arg("offsets");
  return guard([&] {
    const auto r = residues_of(residues, count);
    const circ::PeriodicCode code(period, r);
    const auto v = offset_count == 0
                       ? circ::verify_periodic(code, to_kind(kind))
                       : circ::verify_periodic(
                             code, to_kind(kind),
                             std::span<const std::uint32_t>(offsets, offset_count));
    *out = circ_periodic_verification{from_status(v.status), CIRC_WITNESS_NONE, 0, 0};
    if (const auto* x = std::get_if<std::int64_t>(&v.witness)) {
      out->witness = CIRC_WITNESS_VERTEX;
      out->first = *x;
    } else if (const auto* p = std::get_if<circ::IntegerPair>(&v.witness)) {
      out->witness = CIRC_WITNESS_PAIR;
      out->first = p->first;
      out->second = p->second;
    }
    return CIRC_OK;
  });
}

void circ_search_config_init(circ_search_config* config) {
  if (!config) return;
  const circ::SearchConfig d;
  *config = circ_search_config{};
  config->threads = d.threads;
  config->dihedral = d.dihedral ? 1 : 0;
  config->node_budget = d.node_budget;
  config->max_order_dominating = d.max_order_dominating;
  config->max_order_locating = d.max_order_locating;
  config->max_order_identifying = d.max_order_identifying;
  config->progress = nullptr;
  config->progress_user_data = nullptr;
  config->progress_interval = d.progress_interval;
}

circ_status circ_search_exists(const circ_graph* graph, circ_kind kind, uint32_t k,
                               const circ_search_config* config, circ_search_result** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!graph) return null_arg("graph");
  return guard([&] {
    return store_result(
        circ::exists_code_of_size(graph->graph, to_kind(kind), k, to_config(config)), out);
  });
}

circ_status circ_search_min(const circ_graph* graph, circ_kind kind,
                            const circ_search_config* config, circ_search_result** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!graph) return null_arg("graph");
  return guard([&] {
    return store_result(circ::min_code_size(graph->graph, to_kind(kind), to_config(config)), out);
  });
}

circ_status circ_search_naive(const circ_graph* graph, circ_kind kind, circ_search_result** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!graph) return null_arg("graph");
  return guard([&] {
    return store_result(circ::naive_min_code_size(graph->graph, to_kind(kind)), out);
  });
}

void circ_search_result_free(circ_search_result* result) { delete result; }

circ_outcome circ_result_outcome(const circ_search_result* result) {
  return result ? from_outcome(result->result.outcome) : CIRC_BUDGET_EXCEEDED;
}

circ_kind circ_result_kind(const circ_search_result* result) {
  return result ? from_kind(result->result.kind) : CIRC_DOMINATING;
}

uint32_t circ_result_order(const circ_search_result* result) {
  return result ? result->result.order : 0;
}

uint32_t circ_result_size(const circ_search_result* result) {
  return result ? result->result.size : 0;
}

circ_status circ_result_certificate(const circ_search_result* result, circ_code** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!result) return null_arg("result");
  return guard([&] {
    if (result->result.certificate) *out = new circ_code{*result->result.certificate};
    return CIRC_OK;
  });
}

circ_status circ_result_bounds(const circ_search_result* result, circ_bound_report* out) {
  if (!result) return null_arg("result");
  if (!out) return null_arg("out");
  *out = to_c(result->result.bounds);
  return CIRC_OK;
}

circ_status circ_result_stats(const circ_search_result* result, circ_search_stats* out) {
  if (!result) return null_arg("result");
  if (!out) return null_arg("out");
  const auto& s = result->result.stats;
  *out = circ_search_stats{s.nodes, s.candidates, s.pruned_symmetry, s.pruned_bound,
                           s.wall_seconds};
  return CIRC_OK;
}

circ_status circ_result_refuted_sizes(const circ_search_result* result, uint32_t* buf, size_t cap,
                                      size_t* count) {
  if (!result) return null_arg("result");
  return copy_out(result->result.refuted_sizes, buf, cap, count);
}

}  // extern "C"
