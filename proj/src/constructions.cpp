#include "circ/constructions.hpp"

#include <algorithm>
#include <array>

#include "circ/error.hpp"

namespace circ {

namespace {

constexpr std::array<Vertex, 2> kLocatingBlock{0, 1};
constexpr std::array<Vertex, 4> kIdentifyingBlock{0, 1, 7, 8};

VertexSet periodic_prefix(std::uint32_t period, std::span<const Vertex> block, std::uint32_t t,
                          std::uint32_t universe) {
  VertexSet out(universe);
  for (std::uint32_t i = 0; i < t; ++i)
    for (Vertex j : block) out.insert(period * i + j);
  return out;
}

ConstructionTable make_locating_table() {
  ConstructionTable table;
  table.kind = Kind::Locating;
  table.period = 6;
  table.block.assign(kLocatingBlock.begin(), kLocatingBlock.end());
  table.min_t = 2;
  table.rows = {
      {1, 0, {-2}},
      {2, 1, {}},
      {3, 1, {}},
      {4, 1, {}},
      {5, 1, {-1}},
      {6, 1, {}},
  };
  return table;
}

ConstructionTable make_identifying_table() {
  ConstructionTable table;
  table.kind = Kind::Identifying;
  table.period = 11;
  table.block.assign(kIdentifyingBlock.begin(), kIdentifyingBlock.end());
  table.min_t = 1;
  table.rows = {
      {0, 0, {}},
      {1, 0, {0}},
      {2, 0, {-2, -1}},
      {3, 0, {0, 1}},
      {4, 0, {0, 1}},
      {5, 0, {-2, -1, 3}},
      {6, 0, {0, 1, 4}},
      {7, 0, {0, 1, 5}},
      {8, 0, {0, 1, 6, 7}},
      {9, 0, {0, 1, 6, 7}},
      {10, 0, {0, 1, 6, 7}},
  };
  // Rows 2 and 5 overshoot by one; these orders admit smaller codes.
  table.sporadic = {
      {13, {0, 1, 6, 7, 10}},
      {16, {0, 1, 4, 7, 10, 11}},
      {24, {0, 1, 2, 6, 9, 10, 15, 16, 19}},
      {27, {0, 1, 2, 6, 9, 12, 13, 18, 19, 22}},
      {35, {0, 1, 2, 6, 10, 11, 12, 17, 20, 21, 26, 27, 30}},
  };
  return table;
}

Code build_from_table(const ConstructionTable& table, std::uint32_t n) {
  if (n < table.min_order()) {
    throw Error(Errc::UnsupportedOrder,
                std::string(to_string(table.kind)) + " construction table starts at n=" +
                    std::to_string(table.min_order()) + "; use exact search for n=" +
                    std::to_string(n));
  }
  for (const auto& code : table.sporadic) {
    if (code.order == n) return Code(make_circulant(n, {1, 3}), code.members);
  }
  const auto [t, row] = table.locate(n);
  const auto base_t = static_cast<std::uint32_t>(static_cast<std::int64_t>(t) + row->base_shift);
  VertexSet members = periodic_prefix(table.period, table.block, base_t, n);
  for (auto a : row->additions) {
    const std::int64_t v = static_cast<std::int64_t>(table.period) * t + a;
    if (v < 0 || v >= n) throw Error(Errc::InvalidArgument, "table row leaves Z_n");
    members.insert(static_cast<Vertex>(v));
  }
  return Code(make_circulant(n, {1, 3}), std::move(members));
}

}  // namespace

VertexSet construct_a(std::uint32_t t) {
  return periodic_prefix(6, kLocatingBlock, t, 6 * t);
}

VertexSet construct_b(std::uint32_t t) {
  return periodic_prefix(11, kIdentifyingBlock, t, 11 * t);
}

std::span<const Vertex> identifying_block() { return kIdentifyingBlock; }

std::uint32_t ConstructionTable::min_order() const {
  return period * min_t + rows.front().residue;
}

std::pair<std::uint32_t, const TableRow*> ConstructionTable::locate(std::uint32_t n) const {
  const std::uint32_t first = rows.front().residue;
  const std::uint32_t t = (n - first) / period;
  const std::uint32_t r = n - period * t;
  const auto it = std::find_if(rows.begin(), rows.end(),
                               [r](const TableRow& row) { return row.residue == r; });
  return {t, &*it};
}

const ConstructionTable& locating_table() {
  static const ConstructionTable table = make_locating_table();
  return table;
}

const ConstructionTable& identifying_table() {
  static const ConstructionTable table = make_identifying_table();
  return table;
}

const ConstructionTable& table_for(Kind kind) {
  if (kind == Kind::Locating) return locating_table();
  if (kind == Kind::Identifying) return identifying_table();
  throw Error(Errc::InvalidArgument, "no construction table for dominating sets");
}

Code locating_code_for(std::uint32_t n) { return build_from_table(locating_table(), n); }
Code identifying_code_for(std::uint32_t n) { return build_from_table(identifying_table(), n); }

std::optional<Code> table_construction(std::uint32_t n, Kind kind) {
  if (kind == Kind::Dominating) return std::nullopt;
  const auto& table = table_for(kind);
  if (n < table.min_order()) return std::nullopt;
  return build_from_table(table, n);
}

std::uint32_t target_size(std::uint32_t n, Kind kind) {
  switch (kind) {
    case Kind::Locating: return (n + 2) / 3 + (n % 3 == 2 ? 1 : 0);
    case Kind::Identifying: return (4 * n + 10) / 11 + (n % 11 == 8 ? 1 : 0);
    case Kind::Dominating: break;
  }
  throw Error(Errc::InvalidArgument, "no target size for dominating sets");
}

PeriodicCode::PeriodicCode(std::uint32_t period, std::span<const std::int64_t> residues)
    : period_(period), residues_(period) {
  if (period == 0) throw Error(Errc::InvalidArgument, "period must be positive");
  for (auto r : residues) {
    if (r < 0 || r >= period) {
      throw Error(Errc::InvalidArgument, "residue " + std::to_string(r) + " outside [0, " +
                                             std::to_string(period) + ")");
    }
    residues_.insert(static_cast<Vertex>(r));
  }
}

bool PeriodicCode::contains(std::int64_t x) const {
  const std::int64_t p = period_;
  return residues_.contains(static_cast<Vertex>(((x % p) + p) % p));
}

PeriodicCode a_infinity() { return PeriodicCode(6, {0, 1}); }

PeriodicCode b_infinity() {
  std::vector<std::int64_t> residues(kIdentifyingBlock.begin(), kIdentifyingBlock.end());
  return PeriodicCode(11, residues);
}

Rational density(const PeriodicCode& code) {
  return Rational(static_cast<std::int64_t>(code.residues().size()), code.period());
}

namespace {

std::vector<std::int64_t> periodic_shadow(const PeriodicCode& code,
                                          std::span<const std::uint32_t> offsets, std::int64_t x) {
  std::vector<std::int64_t> out;
  auto visit = [&](std::int64_t y) {
    if (code.contains(y)) out.push_back(y);
  };
  visit(x);
  for (auto d : offsets) {
    visit(x - d);
    visit(x + d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PeriodicVerification verify_periodic(const PeriodicCode& code, Kind kind,
                                     std::span<const std::uint32_t> offsets) {
  if (offsets.empty()) throw Error(Errc::InvalidArgument, "offset set must be nonempty");
  std::vector<std::uint32_t> sorted(offsets.begin(), offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) throw Error(Errc::OffsetOutOfRange, "offsets must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DuplicateOffset, "duplicate offset");
  }
  const std::int64_t p = code.period();
  const std::int64_t reach = sorted.back();

  for (std::int64_t u = 0; u < p; ++u) {
    if (periodic_shadow(code, sorted, u).empty()) return {Status::NotDominating, u};
  }
  if (kind == Kind::Dominating) return {};

  const Status failure = kind == Kind::Locating ? Status::NotLocating : Status::NotIdentifying;
  for (std::int64_t u = 0; u < p; ++u) {
    if (kind == Kind::Locating && code.contains(u)) continue;
    const auto su = periodic_shadow(code, sorted, u);
    for (std::int64_t v = u + 1; v <= u + 2 * reach; ++v) {
      if (kind == Kind::Locating && code.contains(v)) continue;
      if (periodic_shadow(code, sorted, v) == su) return {failure, IntegerPair{u, v}};
    }
  }
  return {};
}

PeriodicVerification verify_periodic(const PeriodicCode& code, Kind kind) {
  static constexpr std::array<std::uint32_t, 2> kOneThree{1, 3};
  return verify_periodic(code, kind, kOneThree);
}

}  // namespace circ
