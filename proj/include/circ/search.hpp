#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "circ/codes.hpp"

namespace circ {

/// Lower bounds on the size of a code of the given kind.
struct BoundReport {
  /// Counting bound from the maximum degree: ceil(2n/(deg+3)) locating,
  /// ceil(2n/(deg+2)) identifying, ceil(n/(deg+1)) dominating.
  std::uint32_t general_bound = 0;
  /// Sharper bound for C(n;1,3), n >= 13: ceil(n/3) locating, ceil(4n/11)
  /// identifying. Absent for other graphs, orders, or kinds.
  std::optional<std::uint32_t> structural_bound;
  std::uint32_t effective = 0;
};

BoundReport lower_bound(const CirculantGraph& graph, Kind kind);
/// Bound for C(n;1,3). Requires n >= 7.
BoundReport lower_bound(std::uint32_t n, Kind kind);

struct SearchProgress {
  std::uint32_t size = 0;  // k currently being searched
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  double elapsed_seconds = 0;
};

struct SearchConfig {
  unsigned threads = 1;
  /// Also identify codes related by reflection x -> -x.
  bool dihedral = false;
  /// Maximum search-tree nodes over the whole call; 0 means unlimited.
  /// Workers check it every 1024 nodes, so a call may overshoot by that much per thread.
  std::uint64_t node_budget = 0;
  /// Largest order min_code_size will try to settle exactly, per kind.
  std::uint32_t max_order_dominating = 40;
  std::uint32_t max_order_locating = 38;
  std::uint32_t max_order_identifying = 33;
  /// Called from worker threads (serialized) roughly every progress_interval nodes.
  std::function<void(const SearchProgress&)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 24;

  std::uint32_t max_order(Kind kind) const noexcept;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  /// Complete k-subsets that reached full verification.
  std::uint64_t candidates = 0;
  std::uint64_t pruned_symmetry = 0;
  std::uint64_t pruned_bound = 0;
  double wall_seconds = 0;
};

enum class SearchOutcome {
  Optimum,         // size is the minimum; certificate attached
  Found,           // a code of the requested size exists; certificate attached
  NoneAtSize,      // certified: no code of the requested size
  NoCode,          // no code of this kind exists at any size (twin vertices)
  BudgetExceeded,  // gave up; bounds and best known code attached
};

const char* to_string(SearchOutcome outcome) noexcept;

struct SearchResult {
  Kind kind = Kind::Locating;
  std::uint32_t order = 0;
  SearchOutcome outcome = SearchOutcome::NoneAtSize;
  /// Optimum/Found: certificate size. NoneAtSize: the refuted size.
  /// BudgetExceeded: the size being searched when the budget ran out. NoCode: 0.
  std::uint32_t size = 0;
  /// Lexicographically least canonical code (for Optimum/Found), or the best
  /// known construction (for BudgetExceeded) when one exists.
  std::optional<Code> certificate;
  BoundReport bounds;
  /// Sizes certified empty during this call, ascending.
  std::vector<std::uint32_t> refuted_sizes;
  SearchStats stats;
};

/// Largest order the exhaustive engine handles (one machine word per set).
inline constexpr std::uint32_t kMaxSearchOrder = 64;

/// Lexicographically least sorted image of `set` under rotations (and
/// reflections when dihedral).
VertexSet canonical_form(const VertexSet& set, bool dihedral = false);

/// Decide whether a code of exactly k vertices exists. Exhaustive over
/// rotation-canonical k-subsets with 0 as minimum, with incremental
/// domination/separation pruning. Outcome is Found, NoneAtSize, or
/// BudgetExceeded. Throws InvalidArgument for k outside [1, n] and
/// UnsupportedOrder for n > kMaxSearchOrder.
SearchResult exists_code_of_size(const GraphPtr& graph, Kind kind, std::uint32_t k,
                                 const SearchConfig& config = {});

/// Minimum code size, iterating k upward from the effective lower bound.
/// Orders above config.max_order(kind) (or a node budget running out) yield
/// BudgetExceeded with bounds and, for C(n;1,3), the table construction.
SearchResult min_code_size(const GraphPtr& graph, Kind kind, const SearchConfig& config = {});

/// Unpruned enumeration of all subsets in size order, checking every vertex
/// pair. Correctness oracle only; throws OracleTooLarge for n > 16.
SearchResult naive_min_code_size(const GraphPtr& graph, Kind kind);

}  // namespace circ
