#ifndef CIRCCODES_H
#define CIRCCODES_H

/* C interface to the circcodes library: circulant graphs, dominating /
 * locating / identifying codes, table constructions, periodic codes and
 * exact search.
 *
 * Conventions:
 *  - Functions return circ_status; CIRC_OK is 0. On failure a message is
 *    available from circ_last_error() on the calling thread.
 *  - Handles are opaque and owned by the caller; release with the matching
 *    *_free function (NULL is accepted).
 *  - List outputs use (buf, cap, *count): *count is always set to the full
 *    length; CIRC_E_BUFFER_TOO_SMALL is returned when cap < *count. Pass
 *    buf = NULL, cap = 0 to query the length.
 *  - Handles are immutable after creation and may be shared across threads.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CIRCCODES_BUILDING)
#    define CIRC_API __declspec(dllexport)
#  else
#    define CIRC_API __declspec(dllimport)
#  endif
#else
#  define CIRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum circ_status {
  CIRC_OK = 0,
  CIRC_E_INVALID_ARGUMENT = 1,
  CIRC_E_OFFSET_OUT_OF_RANGE = 2,
  CIRC_E_DUPLICATE_OFFSET = 3,
  CIRC_E_VERTEX_OUT_OF_RANGE = 4,
  CIRC_E_SHARE_UNDEFINED = 5,
  CIRC_E_NOT_IN_CODE = 6,
  CIRC_E_UNSUPPORTED_ORDER = 7,
  CIRC_E_ORACLE_TOO_LARGE = 8,
  CIRC_E_OVERFLOW = 9,
  CIRC_E_BUFFER_TOO_SMALL = 10,
  CIRC_E_NULL_ARGUMENT = 11,
  CIRC_E_NO_MEMORY = 12,
  CIRC_E_INTERNAL = 13
} circ_status;

typedef enum circ_kind {
  CIRC_DOMINATING = 0,
  CIRC_LOCATING = 1,
  CIRC_IDENTIFYING = 2
} circ_kind;

typedef enum circ_validity {
  CIRC_VALID = 0,
  CIRC_NOT_DOMINATING = 1,
  CIRC_NOT_LOCATING = 2,
  CIRC_NOT_IDENTIFYING = 3
} circ_validity;

typedef enum circ_witness_kind {
  CIRC_WITNESS_NONE = 0,
  CIRC_WITNESS_VERTEX = 1, /* first holds the empty-shadow vertex */
  CIRC_WITNESS_PAIR = 2    /* first < second have equal shadows */
} circ_witness_kind;

typedef enum circ_outcome {
  CIRC_OPTIMUM = 0,
  CIRC_FOUND = 1,
  CIRC_NONE_AT_SIZE = 2,
  CIRC_NO_CODE = 3,
  CIRC_BUDGET_EXCEEDED = 4
} circ_outcome;

typedef struct circ_graph circ_graph;
typedef struct circ_code circ_code;
typedef struct circ_search_result circ_search_result;

/* Exact rational in lowest terms, den > 0. */
typedef struct circ_rational {
  int64_t num;
  int64_t den;
} circ_rational;

typedef struct circ_verification {
  circ_validity status;
  circ_witness_kind witness;
  uint32_t first;
  uint32_t second;
} circ_verification;

typedef struct circ_periodic_verification {
  circ_validity status;
  circ_witness_kind witness;
  int64_t first;
  int64_t second;
} circ_periodic_verification;

typedef struct circ_bound_report {
  uint32_t general_bound;
  int has_structural_bound;
  uint32_t structural_bound;
  uint32_t effective;
} circ_bound_report;

typedef struct circ_search_progress {
  uint32_t size;
  uint64_t nodes;
  uint64_t candidates;
  double elapsed_seconds;
} circ_search_progress;

/* Invoked from search threads, one call at a time. */
typedef void (*circ_progress_fn)(const circ_search_progress* progress, void* user_data);

typedef struct circ_search_config {
  unsigned threads;
  int dihedral;
  uint64_t node_budget; /* 0 = unlimited */
  uint32_t max_order_dominating;
  uint32_t max_order_locating;
  uint32_t max_order_identifying;
  circ_progress_fn progress;
  void* progress_user_data;
  uint64_t progress_interval;
} circ_search_config;

typedef struct circ_search_stats {
  uint64_t nodes;
  uint64_t candidates;
  uint64_t pruned_symmetry;
  uint64_t pruned_bound;
  double wall_seconds;
} circ_search_stats;

/* ---- misc ---- */
CIRC_API const char* circ_version(void);
CIRC_API const char* circ_last_error(void);
CIRC_API const char* circ_status_string(circ_status status);
CIRC_API const char* circ_kind_string(circ_kind kind);
CIRC_API const char* circ_validity_string(circ_validity status);
CIRC_API const char* circ_outcome_string(circ_outcome outcome);
CIRC_API circ_status circ_parse_kind(const char* text, circ_kind* out);

/* ---- graphs ---- */
CIRC_API circ_status circ_graph_create(int64_t n, const int64_t* offsets, size_t count,
                                       circ_graph** out);
CIRC_API void circ_graph_free(circ_graph* graph);
CIRC_API uint32_t circ_graph_order(const circ_graph* graph);
CIRC_API uint32_t circ_graph_degree(const circ_graph* graph);
CIRC_API uint64_t circ_graph_edge_count(const circ_graph* graph);
CIRC_API circ_status circ_graph_offsets(const circ_graph* graph, int64_t* buf, size_t cap,
                                        size_t* count);
CIRC_API circ_status circ_graph_adjacent(const circ_graph* graph, int64_t u, int64_t v, int* out);
CIRC_API circ_status circ_graph_closed_neighborhood(const circ_graph* graph, int64_t u,
                                                    uint32_t* buf, size_t cap, size_t* count);
CIRC_API circ_status circ_graph_ball(const circ_graph* graph, int64_t u, int64_t r, uint32_t* buf,
                                    size_t cap, size_t* count);

/* ---- codes ---- */
CIRC_API circ_status circ_code_create(const circ_graph* graph, const int64_t* members,
                                      size_t count, circ_code** out);
CIRC_API void circ_code_free(circ_code* code);
CIRC_API size_t circ_code_size(const circ_code* code);
CIRC_API uint32_t circ_code_order(const circ_code* code);
CIRC_API circ_status circ_code_members(const circ_code* code, uint32_t* buf, size_t cap,
                                       size_t* count);
CIRC_API circ_status circ_code_verify(const circ_code* code, circ_kind kind,
                                      circ_verification* out);
CIRC_API circ_status circ_code_shadow(const circ_code* code, int64_t u, uint32_t* buf, size_t cap,
                                      size_t* count);
CIRC_API circ_status circ_code_profile(const circ_code* code, int64_t u, uint32_t* buf, size_t cap,
                                       size_t* count);
CIRC_API circ_status circ_code_share(const circ_code* code, int64_t u, circ_rational* out);
CIRC_API circ_status circ_code_sum_of_shares(const circ_code* code, circ_rational* out);
CIRC_API circ_status circ_code_heavy_vertices(const circ_code* code, circ_rational threshold,
                                              uint32_t* buf, size_t cap, size_t* count);
/* Heavy vertices (for the kind's threshold) whose profile is not admissible. */
CIRC_API circ_status circ_code_heavy_profile_violations(const circ_code* code, circ_kind kind,
                                                        uint32_t* buf, size_t cap,
                                                        size_t* count);
CIRC_API circ_status circ_heavy_threshold(circ_kind kind, circ_rational* out);
/* Least image under rotations (and reflections when dihedral != 0). */
CIRC_API circ_status circ_canonical_form(const circ_code* code, int dihedral, uint32_t* buf,
                                         size_t cap, size_t* count);

/* ---- constructions ---- */
/* Table code for C(n;1,3). */
CIRC_API circ_status circ_construct(uint32_t n, circ_kind kind, circ_code** out);
/* A_t over Z_{6t} and B_t over Z_{11t} as sorted vertex lists. */
CIRC_API circ_status circ_construct_a(uint32_t t, uint32_t* buf, size_t cap, size_t* count);
CIRC_API circ_status circ_construct_b(uint32_t t, uint32_t* buf, size_t cap, size_t* count);
CIRC_API circ_status circ_construction_min_order(circ_kind kind, uint32_t* out);
CIRC_API circ_status circ_target_size(uint32_t n, circ_kind kind, uint32_t* out);
CIRC_API circ_status circ_lower_bound(uint32_t n, circ_kind kind, circ_bound_report* out);
CIRC_API circ_status circ_graph_lower_bound(const circ_graph* graph, circ_kind kind,
                                            circ_bound_report* out);

/* Periodic subsets of Z. offsets may be NULL (count 0) for {1,3}. */
CIRC_API circ_status circ_periodic_density(uint32_t period, const int64_t* residues, size_t count,
                                           circ_rational* out);
CIRC_API circ_status circ_periodic_verify(uint32_t period, const int64_t* residues, size_t count,
                                          circ_kind kind, const uint32_t* offsets,
                                          size_t offset_count, circ_periodic_verification* out);

/* ---- search ---- */
CIRC_API void circ_search_config_init(circ_search_config* config);
/* config may be NULL for defaults. */
CIRC_API circ_status circ_search_exists(const circ_graph* graph, circ_kind kind, uint32_t k,
                                        const circ_search_config* config,
                                        circ_search_result** out);
CIRC_API circ_status circ_search_min(const circ_graph* graph, circ_kind kind,
                                     const circ_search_config* config, circ_search_result** out);
CIRC_API circ_status circ_search_naive(const circ_graph* graph, circ_kind kind,
                                       circ_search_result** out);
CIRC_API void circ_search_result_free(circ_search_result* result);
CIRC_API circ_outcome circ_result_outcome(const circ_search_result* result);
CIRC_API circ_kind circ_result_kind(const circ_search_result* result);
CIRC_API uint32_t circ_result_order(const circ_search_result* result);
CIRC_API uint32_t circ_result_size(const circ_search_result* result);
/* *out is NULL when the result carries no code. */
CIRC_API circ_status circ_result_certificate(const circ_search_result* result, circ_code** out);
CIRC_API circ_status circ_result_bounds(const circ_search_result* result, circ_bound_report* out);
CIRC_API circ_status circ_result_stats(const circ_search_result* result, circ_search_stats* out);
CIRC_API circ_status circ_result_refuted_sizes(const circ_search_result* result, uint32_t* buf,
                                               size_t cap, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* CIRCCODES_H */
