#include "circ/codes.hpp"

#include <algorithm>
#include <sstream>

#include "circ/error.hpp"

namespace circ {

const char* to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Dominating: return "dominating";
    case Kind::Locating: return "locating";
    case Kind::Identifying: return "identifying";
  }
  return "unknown";
}

Kind parse_kind(std::string_view text) {
  if (text == "dominating") return Kind::Dominating;
  if (text == "locating") return Kind::Locating;
  if (text == "identifying") return Kind::Identifying;
  throw Error(Errc::InvalidArgument, "unknown code kind '" + std::string(text) + "'");
}

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::Valid: return "valid";
    case Status::NotDominating: return "not_dominating";
    case Status::NotLocating: return "not_locating";
    case Status::NotIdentifying: return "not_identifying";
  }
  return "unknown";
}

Code::Code(GraphPtr graph, VertexSet members)
    : graph_(std::move(graph)), members_(std::move(members)) {
  if (!graph_) throw Error(Errc::InvalidArgument, "code requires a graph");
  if (members_.universe() != graph_->order()) {
    throw Error(Errc::InvalidArgument, "code universe does not match graph order");
  }
}

Code::Code(GraphPtr graph, std::span<const Vertex> members)
    : Code(graph, VertexSet(graph ? graph->order() : 0, members)) {}

Shadow shadow(const Code& code, Vertex u) {
  return Shadow{u, code.members() & code.graph().closed_neighborhood(u)};
}

namespace {

std::vector<VertexSet> all_shadows(const Code& code) {
  const auto n = code.graph().order();
  std::vector<VertexSet> out;
  out.reserve(n);
  for (Vertex u = 0; u < n; ++u) out.push_back(code.members() & code.graph().closed_neighborhood(u));
  return out;
}

std::vector<std::uint32_t> shadow_sizes(const Code& code) {
  const auto n = code.graph().order();
  std::vector<std::uint32_t> out(n);
  for (Vertex u = 0; u < n; ++u) {
    out[u] = static_cast<std::uint32_t>(
        (code.members() & code.graph().closed_neighborhood(u)).size());
  }
  return out;
}

// Partners v > u within circular distance 2*max_offset, ascending.
std::vector<Vertex> near_partners(const CirculantGraph& g, Vertex u) {
  const auto n = g.order();
  const auto reach = std::min<std::uint32_t>(2 * g.max_offset(), n - 1);
  std::vector<Vertex> out;
  for (std::uint32_t j = 1; j <= reach; ++j) {
    const Vertex fwd = (u + j) % n;
    const Vertex bwd = (u + n - j) % n;
    if (fwd > u) out.push_back(fwd);
    if (bwd > u) out.push_back(bwd);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationResult check(const Code& code, Kind kind) {
  const auto& g = code.graph();
  const auto shadows = all_shadows(code);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (shadows[u].empty()) return {Status::NotDominating, u};
  }
  if (kind == Kind::Dominating) return {};

  const Status failure = kind == Kind::Locating ? Status::NotLocating : Status::NotIdentifying;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (kind == Kind::Locating && code.contains(u)) continue;
    for (Vertex v : near_partners(g, u)) {
      if (kind == Kind::Locating && code.contains(v)) continue;
      if (shadows[u] == shadows[v]) return {failure, VertexPair{u, v}};
    }
  }
  return {};
}

}  // namespace

VerificationResult is_dominating(const Code& code) { return check(code, Kind::Dominating); }
VerificationResult is_locating(const Code& code) { return check(code, Kind::Locating); }
VerificationResult is_identifying(const Code& code) { return check(code, Kind::Identifying); }
VerificationResult verify(const Code& code, Kind kind) { return check(code, kind); }

std::string Profile::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

Profile profile(const Code& code, Vertex u) {
  Profile p;
  code.graph().closed_neighborhood(u).for_each([&](Vertex x) {
    p.entries.push_back(
        static_cast<std::uint32_t>((code.members() & code.graph().closed_neighborhood(x)).size()));
  });
  std::sort(p.entries.begin(), p.entries.end());
  return p;
}

namespace {

Rational share_from_sizes(const Code& code, const std::vector<std::uint32_t>& sizes, Vertex u) {
  Rational total;
  code.graph().closed_neighborhood(u).for_each([&](Vertex x) {
    if (sizes[x] == 0) {
      throw Error(Errc::ShareUndefined, "vertex " + std::to_string(x) + " in N[" +
                                            std::to_string(u) + "] has an empty shadow");
    }
    total += Rational(1, sizes[x]);
  });
  return total;
}

}  // namespace

Rational share(const Code& code, Vertex u) {
  if (!code.contains(u)) {
    throw Error(Errc::NotInCode, "share is defined for code vertices only; " + std::to_string(u) +
                                     " is not in the code");
  }
  return share_from_sizes(code, shadow_sizes(code), u);
}

Rational sum_of_shares(const Code& code) {
  const auto sizes = shadow_sizes(code);
  for (Vertex u = 0; u < sizes.size(); ++u) {
    if (sizes[u] == 0) {
      throw Error(Errc::ShareUndefined, "code is not dominating (vertex " + std::to_string(u) + ")");
    }
  }
  Rational total;
  code.members().for_each([&](Vertex u) { total += share_from_sizes(code, sizes, u); });
  return total;
}

std::vector<Vertex> heavy_vertices(const Code& code, const Rational& threshold) {
  const auto sizes = shadow_sizes(code);
  for (Vertex u = 0; u < sizes.size(); ++u) {
    if (sizes[u] == 0) {
      throw Error(Errc::ShareUndefined, "code is not dominating (vertex " + std::to_string(u) + ")");
    }
  }
  std::vector<Vertex> out;
  code.members().for_each([&](Vertex u) {
    if (share_from_sizes(code, sizes, u) > threshold) out.push_back(u);
  });
  return out;
}

Rational heavy_threshold(Kind kind) {
  switch (kind) {
    case Kind::Locating: return Rational(3);
    case Kind::Identifying: return Rational(11, 4);
    case Kind::Dominating: break;
  }
  throw Error(Errc::InvalidArgument, "heavy vertices are defined for locating/identifying codes");
}

std::vector<Profile> admissible_heavy_profiles(Kind kind) {
  switch (kind) {
    case Kind::Locating: return {Profile{{1, 1, 2, 2, 3}}, Profile{{1, 1, 2, 3, 4}}};
    case Kind::Identifying: return {Profile{{1, 2, 2, 2, 3}}};
    case Kind::Dominating: break;
  }
  throw Error(Errc::InvalidArgument, "heavy vertices are defined for locating/identifying codes");
}

std::vector<Vertex> heavy_profile_violations(const Code& code, Kind kind) {
  const auto allowed = admissible_heavy_profiles(kind);
  std::vector<Vertex> out;
  for (Vertex u : heavy_vertices(code, heavy_threshold(kind))) {
    const auto p = profile(code, u);
    if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) out.push_back(u);
  }
  return out;
}

}  // namespace circ
