#include "circ/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "circ/constructions.hpp"
#include "circ/error.hpp"

namespace circ {

const char* to_string(SearchOutcome outcome) noexcept {
  switch (outcome) {
    case SearchOutcome::Optimum: return "optimum";
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NoneAtSize: return "none_at_size";
    case SearchOutcome::NoCode: return "no_code";
    case SearchOutcome::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::uint32_t SearchConfig::max_order(Kind kind) const noexcept {
  switch (kind) {
    case Kind::Dominating: return max_order_dominating;
    case Kind::Locating: return max_order_locating;
    case Kind::Identifying: return max_order_identifying;
  }
  return 0;
}

namespace {

std::uint32_t ceil_div(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint32_t>((num + den - 1) / den);
}

}  // namespace

BoundReport lower_bound(const CirculantGraph& graph, Kind kind) {
  const std::uint64_t n = graph.order();
  const std::uint64_t deg = graph.degree();
  BoundReport report;
  switch (kind) {
    case Kind::Dominating: report.general_bound = ceil_div(n, deg + 1); break;
    case Kind::Locating: report.general_bound = ceil_div(2 * n, deg + 3); break;
    case Kind::Identifying: report.general_bound = ceil_div(2 * n, deg + 2); break;
  }
  if (graph.is_one_three() && n >= 13) {
    if (kind == Kind::Locating) report.structural_bound = ceil_div(n, 3);
    if (kind == Kind::Identifying) report.structural_bound = ceil_div(4 * n, 11);
  }
  report.effective = std::max(report.general_bound, report.structural_bound.value_or(0));
  report.effective = std::max<std::uint32_t>(report.effective, 1);
  return report;
}

BoundReport lower_bound(std::uint32_t n, Kind kind) {
  if (n < 7) throw Error(Errc::InvalidArgument, "C(n;1,3) requires n >= 7");
  return lower_bound(CirculantGraph(n, {1, 3}), kind);
}

namespace {

std::vector<std::uint32_t> cyclic_gaps(const std::vector<Vertex>& sorted, std::uint32_t n) {
  std::vector<std::uint32_t> gaps(sorted.size());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) gaps[i] = sorted[i + 1] - sorted[i];
  gaps.back() = n - sorted.back() + sorted.front();
  return gaps;
}

// True if rotation `start` of `seq` compares lexicographically below `ref`.
bool rotation_less(const std::vector<std::uint32_t>& seq, std::size_t start,
                   const std::vector<std::uint32_t>& ref) {
  const std::size_t k = seq.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = seq[(start + i) % k];
    if (a != ref[i]) return a < ref[i];
  }
  return false;
}

}  // namespace

VertexSet canonical_form(const VertexSet& set, bool dihedral) {
  const auto n = static_cast<std::uint32_t>(set.universe());
  const auto elems = set.to_vector();
  if (elems.empty()) return set;

  // The sorted tuple of a rotation that starts at a member is (0, partial sums
  // of the gap sequence), so lexicographic order on tuples is lexicographic
  // order on rotated gap sequences.
  const auto gaps = cyclic_gaps(elems, n);
  std::vector<std::uint32_t> best = gaps;
  auto consider = [&](const std::vector<std::uint32_t>& seq) {
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (rotation_less(seq, j, best)) {
        for (std::size_t i = 0; i < seq.size(); ++i) best[i] = seq[(j + i) % seq.size()];
      }
    }
  };
  consider(gaps);
  if (dihedral) consider(std::vector<std::uint32_t>(gaps.rbegin(), gaps.rend()));

  VertexSet out(n);
  Vertex at = 0;
  for (std::size_t i = 0; i < best.size(); ++i) {
    out.insert(at);
    at += best[i];
  }
  return out;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(std::uint32_t i) { return Mask{1} << i; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Immutable description of one exact-size search.
struct Problem {
  std::uint32_t n = 0;
  std::uint32_t reach = 0;  // max offset
  std::uint32_t k = 0;
  Kind kind = Kind::Locating;
  bool dihedral = false;
  std::vector<Mask> closed;
  // partners[u]: vertices v > u within circular distance 2*reach.
  std::vector<std::vector<Vertex>> partners;

  Problem(const CirculantGraph& g, Kind kind_, std::uint32_t k_, bool dihedral_)
      : n(g.order()), reach(g.max_offset()), k(k_), kind(kind_), dihedral(dihedral_) {
    closed.resize(n);
    partners.resize(n);
    for (Vertex u = 0; u < n; ++u) {
      g.closed_neighborhood(u).for_each([&](Vertex x) { closed[u] |= bit(x); });
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.circular_distance(u, v) <= 2 * reach) partners[u].push_back(v);
      }
    }
  }

  bool separated(Mask s, Vertex u, Vertex v) const {
    if (kind == Kind::Locating && (((s >> u) | (s >> v)) & 1U)) return true;
    return (s & closed[u]) != (s & closed[v]);
  }

  bool valid(Mask s) const {
    for (Vertex u = 0; u < n; ++u)
      if ((s & closed[u]) == 0) return false;
    if (kind == Kind::Dominating) return true;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : partners[u])
        if (!separated(s, u, v)) return false;
    return true;
  }

  // After deciding vertex i, vertex x = i - reach has its whole closed
  // neighbourhood decided (when it does not wrap past 0). Check x against the
  // earlier fully decided vertices it could collide with.
  bool decided_ok(Mask s, std::uint32_t i) const {
    if (i < 2 * reach) return true;
    const Vertex x = i - reach;
    const Mask sx = s & closed[x];
    if (sx == 0) return false;
    if (kind == Kind::Dominating) return true;
    if (kind == Kind::Locating && ((s >> x) & 1U)) return true;
    const Vertex lo = x >= 3 * reach ? x - 2 * reach : reach;
    for (Vertex y = lo; y < x; ++y) {
      if (kind == Kind::Locating && ((s >> y) & 1U)) continue;
      if ((s & closed[y]) == sx) return false;
    }
    return true;
  }

  bool canonical(Mask s) const {
    std::vector<Vertex> elems;
    for (Mask m = s; m != 0; m &= m - 1) elems.push_back(static_cast<Vertex>(std::countr_zero(m)));
    const auto gaps = cyclic_gaps(elems, n);
    for (std::size_t j = 1; j < gaps.size(); ++j)
      if (rotation_less(gaps, j, gaps)) return false;
    if (dihedral) {
      const std::vector<std::uint32_t> rev(gaps.rbegin(), gaps.rend());
      for (std::size_t j = 0; j < rev.size(); ++j)
        if (rotation_less(rev, j, gaps)) return false;
    }
    return true;
  }
};

/// State shared by all workers of one exact-size search. Tasks are prefixes
/// (second and third smallest elements) in lexicographic order, so the
/// lowest-indexed task with a hit holds the lexicographically least code.
struct Shared {
  const Problem& problem;
  std::vector<std::vector<Vertex>> tasks;
  std::vector<std::optional<Mask>> hits;
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> candidates{0};
  std::atomic<bool> budget_hit{false};
  std::uint64_t node_offset = 0;  // nodes spent by earlier calls sharing the budget
  std::uint64_t node_budget = 0;
  const SearchConfig& config;
  Clock::time_point start;
  std::mutex progress_mutex;
  std::atomic<std::uint64_t> next_report{0};

  Shared(const Problem& p, const SearchConfig& c) : problem(p), config(c), start(Clock::now()) {
    next_report = c.progress_interval;
  }
};

class Worker {
 public:
  explicit Worker(Shared& shared) : shared_(shared), p_(shared.problem) {}

  void run() {
    for (;;) {
      const std::size_t t = shared_.next_task.fetch_add(1);
      if (t >= shared_.tasks.size() || shared_.budget_hit.load()) break;
      if (t > shared_.best_task.load()) continue;
      run_task(t);
      if (hit_) {
        shared_.hits[t] = hit_;
        std::size_t cur = shared_.best_task.load();
        while (t < cur && !shared_.best_task.compare_exchange_weak(cur, t)) {
        }
      }
    }
    flush();
  }

  const SearchStats& stats() const { return stats_; }

 private:
  void run_task(std::size_t t) {
    task_ = t;
    hit_.reset();
    const auto& prefix = shared_.tasks[t];
    min_gap_ = prefix.front();
    forced_upto_ = prefix.back();
    forced_ = 0;
    for (Vertex v : prefix) forced_ |= bit(v);
    dfs(1, bit(0), 1, 0);
  }

  // Returns true to unwind: a code was found or the search was cancelled.
  bool dfs(std::uint32_t i, Mask s, std::uint32_t count, std::uint32_t last) {
    ++stats_.nodes;
    if ((++unflushed_ & 0x3FF) == 0 && tick()) return true;
    if (count == p_.k) return leaf(s, last);
    if (i >= p_.n) return false;

    // Remaining elements are spaced at least min_gap_ apart, wrap gap included.
    const std::uint32_t remaining = p_.k - count;
    const std::uint32_t next_min = std::max(i, last + min_gap_);
    if (next_min + remaining * min_gap_ > p_.n) {
      ++stats_.pruned_bound;
      return false;
    }

    if (i <= forced_upto_) {
      const bool take = (forced_ >> i) & 1U;
      const Mask next = take ? s | bit(i) : s;
      if (!p_.decided_ok(next, i)) {
        ++stats_.pruned_bound;
        return false;
      }
      return dfs(i + 1, next, count + (take ? 1 : 0), take ? i : last);
    }

    if (i - last >= min_gap_) {
      const Mask next = s | bit(i);
      if (p_.decided_ok(next, i)) {
        if (dfs(i + 1, next, count + 1, i)) return true;
      } else {
        ++stats_.pruned_bound;
      }
    } else {
      ++stats_.pruned_symmetry;
    }

    if (p_.decided_ok(s, i)) return dfs(i + 1, s, count, last);
    ++stats_.pruned_bound;
    return false;
  }

  bool leaf(Mask s, std::uint32_t last) {
    if (p_.n - last < min_gap_) {
      ++stats_.pruned_symmetry;
      return false;
    }
    ++stats_.candidates;
    if (!p_.valid(s)) return false;
    if (!p_.canonical(s)) {
      ++stats_.pruned_symmetry;
      return false;
    }
    hit_ = s;
    return true;
  }

  // Periodic bookkeeping; true means stop this task.
  bool tick() {
    flush();
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return true;
    if (shared_.best_task.load(std::memory_order_relaxed) < task_) return true;
    return false;
  }

  void flush() {
    const std::uint64_t total = shared_.nodes.fetch_add(unflushed_) + unflushed_;
    shared_.candidates.fetch_add(stats_.candidates - flushed_candidates_);
    flushed_candidates_ = stats_.candidates;
    unflushed_ = 0;
    if (shared_.node_budget != 0 && shared_.node_offset + total > shared_.node_budget) {
      shared_.budget_hit = true;
    }
    if (shared_.config.progress) {
      std::uint64_t due = shared_.next_report.load();
      if (total >= due &&
          shared_.next_report.compare_exchange_strong(due, total + shared_.config.progress_interval)) {
        std::lock_guard lock(shared_.progress_mutex);
        shared_.config.progress(SearchProgress{p_.k, shared_.node_offset + total,
                                               shared_.candidates.load(),
                                               seconds_since(shared_.start)});
      }
    }
  }

  Shared& shared_;
  const Problem& p_;
  SearchStats stats_;
  std::size_t task_ = 0;
  std::optional<Mask> hit_;
  std::uint32_t min_gap_ = 1;
  std::uint32_t forced_upto_ = 0;
  Mask forced_ = 0;
  std::uint64_t unflushed_ = 0;
  std::uint64_t flushed_candidates_ = 0;
};

std::vector<std::vector<Vertex>> make_tasks(std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<Vertex>> tasks;
  for (std::uint32_t a1 = 1; k * a1 <= n; ++a1) {
    if (k == 2) {
      tasks.push_back({a1});
      continue;
    }
    for (std::uint32_t a2 = 2 * a1; a2 + (k - 2) * a1 <= n; ++a2) tasks.push_back({a1, a2});
  }
  return tasks;
}

Code mask_to_code(const GraphPtr& graph, Mask s) {
  VertexSet members(graph->order());
  for (Mask m = s; m != 0; m &= m - 1) members.insert(static_cast<Vertex>(std::countr_zero(m)));
  return Code(graph, std::move(members));
}

void require_searchable(const GraphPtr& graph) {
  if (!graph) throw Error(Errc::InvalidArgument, "search requires a graph");
  if (graph->order() > kMaxSearchOrder) {
    throw Error(Errc::UnsupportedOrder, "exhaustive search supports n <= " +
                                            std::to_string(kMaxSearchOrder));
  }
}

void accumulate(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.candidates += from.candidates;
  into.pruned_symmetry += from.pruned_symmetry;
  into.pruned_bound += from.pruned_bound;
}

SearchResult exists_impl(const GraphPtr& graph, Kind kind, std::uint32_t k,
                         const SearchConfig& config, std::uint64_t node_offset) {
  const auto start = Clock::now();
  SearchResult result;
  result.kind = kind;
  result.order = graph->order();
  result.size = k;
  result.bounds = lower_bound(*graph, kind);

  const Problem problem(*graph, kind, k, config.dihedral);
  if (k == 1) {
    ++result.stats.nodes;
    ++result.stats.candidates;
    if (problem.valid(bit(0))) {
      result.outcome = SearchOutcome::Found;
      result.certificate = mask_to_code(graph, bit(0));
    } else {
      result.outcome = SearchOutcome::NoneAtSize;
    }
    result.stats.wall_seconds = seconds_since(start);
    return result;
  }

  Shared shared(problem, config);
  shared.tasks = make_tasks(problem.n, k);
  shared.hits.resize(shared.tasks.size());
  shared.node_offset = node_offset;
  shared.node_budget = config.node_budget;

  const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, 256));
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) workers.emplace_back(shared);
  if (threads == 1) {
    workers.front().run();
  } else {
    std::vector<std::thread> pool;
    for (auto& w : workers) pool.emplace_back([&w] { w.run(); });
    for (auto& th : pool) th.join();
  }
  for (const auto& w : workers) accumulate(result.stats, w.stats());

  const auto found = std::find_if(shared.hits.begin(), shared.hits.end(),
                                  [](const auto& h) { return h.has_value(); });
  if (found != shared.hits.end()) {
    result.outcome = SearchOutcome::Found;
    result.certificate = mask_to_code(graph, **found);
  } else if (shared.budget_hit) {
    result.outcome = SearchOutcome::BudgetExceeded;
  } else {
    result.outcome = SearchOutcome::NoneAtSize;
  }
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace

SearchResult exists_code_of_size(const GraphPtr& graph, Kind kind, std::uint32_t k,
                                 const SearchConfig& config) {
  require_searchable(graph);
  if (k < 1 || k > graph->order()) {
    throw Error(Errc::InvalidArgument, "code size must lie in [1, n]");
  }
  return exists_impl(graph, kind, k, config, 0);
}

SearchResult min_code_size(const GraphPtr& graph, Kind kind, const SearchConfig& config) {
  if (!graph) throw Error(Errc::InvalidArgument, "search requires a graph");
  const auto start = Clock::now();
  SearchResult result;
  result.kind = kind;
  result.order = graph->order();
  result.bounds = lower_bound(*graph, kind);
  result.size = result.bounds.effective;

  auto give_up = [&]() {
    result.outcome = SearchOutcome::BudgetExceeded;
    if (graph->is_one_three()) result.certificate = table_construction(graph->order(), kind);
    result.stats.wall_seconds = seconds_since(start);
    return result;
  };

  if (graph->order() > std::min(config.max_order(kind), kMaxSearchOrder)) return give_up();

  const Problem full(*graph, kind, graph->order(), false);
  if (!full.valid(~Mask{0} >> (64 - graph->order()))) {
    result.outcome = SearchOutcome::NoCode;
    result.size = 0;
    result.stats.wall_seconds = seconds_since(start);
    return result;
  }

  for (std::uint32_t k = result.bounds.effective; k <= graph->order(); ++k) {
    result.size = k;
    auto step = exists_impl(graph, kind, k, config, result.stats.nodes);
    accumulate(result.stats, step.stats);
    switch (step.outcome) {
      case SearchOutcome::Found:
        result.outcome = SearchOutcome::Optimum;
        result.certificate = std::move(step.certificate);
        result.stats.wall_seconds = seconds_since(start);
        return result;
      case SearchOutcome::NoneAtSize:
        result.refuted_sizes.push_back(k);
        break;
      default:
        return give_up();
    }
  }
  // Unreachable: the full vertex set is a valid code.
  throw Error(Errc::InvalidArgument, "search exhausted all sizes");
}

SearchResult naive_min_code_size(const GraphPtr& graph, Kind kind) {
  if (!graph) throw Error(Errc::InvalidArgument, "search requires a graph");
  const std::uint32_t n = graph->order();
  if (n > 16) throw Error(Errc::OracleTooLarge, "naive oracle supports n <= 16");
  const auto start = Clock::now();

  // Neighbourhoods straight from the adjacency predicate; every pair compared.
  std::array<std::uint32_t, 16> closed{};
  for (Vertex u = 0; u < n; ++u) {
    closed[u] = 1U << u;
    for (Vertex v = 0; v < n; ++v)
      if (graph->adjacent(u, v)) closed[u] |= 1U << v;
  }
  auto valid = [&](std::uint32_t s) {
    std::array<std::uint32_t, 16> sh{};
    for (Vertex u = 0; u < n; ++u) {
      sh[u] = s & closed[u];
      if (sh[u] == 0) return false;
    }
    if (kind == Kind::Dominating) return true;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (kind == Kind::Locating && (((s >> u) | (s >> v)) & 1U)) continue;
        if (sh[u] == sh[v]) return false;
      }
    }
    return true;
  };

  SearchResult result;
  result.kind = kind;
  result.order = n;
  result.bounds = lower_bound(*graph, kind);
  for (std::uint32_t k = 0; k <= n; ++k) {
    if (k == 0) {
      ++result.stats.candidates;
      result.refuted_sizes.push_back(0);
      continue;
    }
    // Gosper's hack: all n-bit words of popcount k in increasing order.
    const std::uint32_t limit = 1U << n;
    for (std::uint32_t s = (1U << k) - 1; s < limit;) {
      ++result.stats.candidates;
      if (valid(s)) {
        result.outcome = SearchOutcome::Optimum;
        result.size = k;
        result.certificate = mask_to_code(graph, s);
        result.stats.wall_seconds = seconds_since(start);
        return result;
      }
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
    result.refuted_sizes.push_back(k);
  }
  result.outcome = SearchOutcome::NoCode;
  result.size = 0;
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace circ
