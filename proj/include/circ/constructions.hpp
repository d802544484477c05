#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "circ/codes.hpp"

namespace circ {

/// {6i, 6i+1 : 0 <= i < t} as a subset of Z_{6t}.
VertexSet construct_a(std::uint32_t t);
/// {11i + j : 0 <= i < t, j in identifying_block()} as a subset of Z_{11t}.
VertexSet construct_b(std::uint32_t t);

/// Residues of one period of the identifying pattern.
std::span<const Vertex> identifying_block();

/// One row of a construction table. For n = period*t + residue the code is
/// base(t + base_shift) ∪ {period*t + a : a in additions}.
struct TableRow {
  std::uint32_t residue = 0;
  std::int32_t base_shift = 0;
  std::vector<std::int32_t> additions;
};

/// A code for one specific order, used in place of its row.
struct SporadicCode {
  std::uint32_t order = 0;
  std::vector<Vertex> members;
};

struct ConstructionTable {
  Kind kind = Kind::Locating;
  std::uint32_t period = 0;
  /// Residues in the base block (e.g. {0,1} for period 6).
  std::vector<Vertex> block;
  /// Smallest t for which the rows apply.
  std::uint32_t min_t = 0;
  std::vector<TableRow> rows;
  /// Orders that take an explicit code instead of their row.
  std::vector<SporadicCode> sporadic;

  /// Smallest order the table covers.
  std::uint32_t min_order() const;
  /// Splits n into (t, row) per the table's indexing. Ignores sporadic codes.
  std::pair<std::uint32_t, const TableRow*> locate(std::uint32_t n) const;
};

const ConstructionTable& locating_table();
const ConstructionTable& identifying_table();
const ConstructionTable& table_for(Kind kind);

/// Table code for C(n;1,3). Throws UnsupportedOrder below the table range.
Code locating_code_for(std::uint32_t n);
Code identifying_code_for(std::uint32_t n);
/// nullopt when n is outside the table range or kind is dominating.
std::optional<Code> table_construction(std::uint32_t n, Kind kind);

/// Size the tables aim for: ceil(n/3) (+1 if n = 2 mod 3) for
/// locating, ceil(4n/11) (+1 if n = 8 mod 11) for identifying.
std::uint32_t target_size(std::uint32_t n, Kind kind);

/// Periodic subset of Z: x is a member iff (x mod period) is in residues.
class PeriodicCode {
 public:
  /// Throws InvalidArgument for period 0 or residues outside [0, period).
  PeriodicCode(std::uint32_t period, std::span<const std::int64_t> residues);
  PeriodicCode(std::uint32_t period, std::initializer_list<std::int64_t> residues)
      : PeriodicCode(period, std::span<const std::int64_t>(residues.begin(), residues.size())) {}

  std::uint32_t period() const noexcept { return period_; }
  const VertexSet& residues() const noexcept { return residues_; }
  bool contains(std::int64_t x) const;

 private:
  std::uint32_t period_;
  VertexSet residues_;
};

/// Period 6, residues {0,1}.
PeriodicCode a_infinity();
/// Period 11, residues identifying_block().
PeriodicCode b_infinity();

/// |residues| / period.
Rational density(const PeriodicCode& code);

struct IntegerPair {
  std::int64_t first = 0;
  std::int64_t second = 0;
  auto operator<=>(const IntegerPair&) const = default;
};

struct PeriodicVerification {
  Status status = Status::Valid;
  std::variant<std::monostate, std::int64_t, IntegerPair> witness;

  bool valid() const noexcept { return status == Status::Valid; }
};

/// Checks the code as a subset of the infinite circulant C(∞; offsets).
/// Shadows lie within max_offset of their owner, so it suffices to check
/// domination on one period and separation of pairs (u, v) with
/// 0 <= u < period and u < v <= u + 2*max_offset.
PeriodicVerification verify_periodic(const PeriodicCode& code, Kind kind,
                                     std::span<const std::uint32_t> offsets);
PeriodicVerification verify_periodic(const PeriodicCode& code, Kind kind);

}  // namespace circ
