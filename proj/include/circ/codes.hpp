#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circ/circulant.hpp"
#include "circ/rational.hpp"
#include "circ/vertex_set.hpp"

namespace circ {

enum class Kind { Dominating, Locating, Identifying };

const char* to_string(Kind kind) noexcept;
/// Accepts "dominating", "locating", "identifying". Throws InvalidArgument.
Kind parse_kind(std::string_view text);

/// A vertex subset S of a circulant graph.
class Code {
 public:
  /// members.universe() must equal the graph order.
  Code(GraphPtr graph, VertexSet members);
  /// Throws VertexOutOfRange for members outside Z_n.
  Code(GraphPtr graph, std::span<const Vertex> members);
  Code(GraphPtr graph, std::initializer_list<Vertex> members)
      : Code(std::move(graph), std::span<const Vertex>(members.begin(), members.size())) {}

  const CirculantGraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const VertexSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Vertex v) const { return members_.contains(v); }

 private:
  GraphPtr graph_;
  VertexSet members_;
};

/// S_u = S ∩ N[u].
struct Shadow {
  Vertex owner = 0;
  VertexSet members;
};

Shadow shadow(const Code& code, Vertex u);

enum class Status { Valid, NotDominating, NotLocating, NotIdentifying };

const char* to_string(Status status) noexcept;

struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;
  auto operator<=>(const VertexPair&) const = default;
};

/// Either nothing (valid), an empty-shadow vertex, or a pair with equal shadows.
using Witness = std::variant<std::monostate, Vertex, VertexPair>;

struct VerificationResult {
  Status status = Status::Valid;
  Witness witness;

  bool valid() const noexcept { return status == Status::Valid; }
};

// Failure witnesses are deterministic: the smallest empty-shadow vertex, or
// the lexicographically smallest colliding pair (first < second). Only pairs
// at circular distance <= 2*max_offset are compared; farther shadows are
// disjoint, so nonempty ones cannot collide.
VerificationResult is_dominating(const Code& code);
VerificationResult is_locating(const Code& code);
VerificationResult is_identifying(const Code& code);
VerificationResult verify(const Code& code, Kind kind);

/// Ascending shadow sizes |S_x| over x ∈ N[u].
struct Profile {
  std::vector<std::uint32_t> entries;

  bool operator==(const Profile&) const = default;
  std::string to_string() const;  // "(1,2,2,2,3)"
};

Profile profile(const Code& code, Vertex u);

/// Sum over x ∈ N[u] of 1/|S_x|. Throws NotInCode if u ∉ S, ShareUndefined if
/// some x ∈ N[u] has an empty shadow.
Rational share(const Code& code, Vertex u);

/// Sum of shares over the code; equals n for every dominating code.
/// Throws ShareUndefined if the code is not dominating.
Rational sum_of_shares(const Code& code);

/// Code vertices whose share strictly exceeds the threshold.
std::vector<Vertex> heavy_vertices(const Code& code, const Rational& threshold);

/// Share threshold above which a code vertex counts as heavy in the C(n;1,3)
/// averaging arguments: 3 for locating codes, 11/4 for identifying codes.
Rational heavy_threshold(Kind kind);

/// Profiles a heavy vertex may have in a code of this kind on C(n;1,3):
/// {(1,1,2,2,3), (1,1,2,3,4)} for locating, {(1,2,2,2,3)} for identifying.
std::vector<Profile> admissible_heavy_profiles(Kind kind);

/// Heavy vertices whose profile is not admissible. Empty for every valid
/// locating/identifying code on C(n;1,3) with n >= 13.
std::vector<Vertex> heavy_profile_violations(const Code& code, Kind kind);

}  // namespace circ
