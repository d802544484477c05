#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "capi.hpp"
#include "manifest.hpp"

namespace circ_cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- parsing helpers ----

std::int64_t parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw UsageError("malformed " + what + " '" + token + "'");
  }
  return v;
}

// Comma- and/or whitespace-separated integers. Empty text gives an empty list.
std::vector<std::int64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_int(token, what));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (ch == ',' && token.empty()) throw UsageError("malformed " + what + " list '" + text + "'");
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

// "0,4,5,6" or "@path" naming a file with one vertex per line ('#' starts a comment).
std::vector<std::int64_t> parse_code_arg(const std::string& text) {
  if (text.empty() || text.front() != '@') return parse_list(text, "vertex");
  const std::string path = text.substr(1);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read code file '" + path + "'");
  std::vector<std::int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto v : parse_list(line, "vertex")) out.push_back(v);
  }
  return out;
}

circ_kind parse_kind_arg(const std::string& text) {
  circ_kind kind{};
  if (circ_parse_kind(text.c_str(), &kind) != CIRC_OK) {
    throw UsageError("unknown kind '" + text + "' (expected dominating, locating or identifying)");
  }
  return kind;
}

circ_rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  circ_rational r{parse_int(text.substr(0, slash), "rational"), 1};
  if (slash != std::string::npos) r.den = parse_int(text.substr(slash + 1), "rational");
  if (r.den <= 0) throw UsageError("rational '" + text + "' needs a positive denominator");
  return r;
}

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv(kBudgetEnv);
  if (!raw || !*raw) return std::nullopt;
  const auto v = parse_int(raw, std::string(kBudgetEnv) + " value");
  if (v < 0) throw UsageError(std::string(kBudgetEnv) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

// ---- formatting helpers ----

std::string rat_str(circ_rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

template <class T>
std::string set_str(const std::vector<T>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

template <class T>
std::string tuple_str(const std::vector<T>& v) {
  std::string s = set_str(v);
  s.front() = '(';
  s.back() = ')';
  return s;
}

std::string graph_str(std::int64_t n, const std::vector<std::int64_t>& offsets) {
  std::string s = "C(" + std::to_string(n) + ";";
  for (std::size_t i = 0; i < offsets.size(); ++i) s += (i ? "," : "") + std::to_string(offsets[i]);
  return s + ")";
}

json bounds_json(const circ_bound_report& b) {
  return {{"general", b.general_bound},
          {"structural", b.has_structural_bound ? json(b.structural_bound) : json(nullptr)},
          {"effective", b.effective}};
}

std::string bounds_str(const circ_bound_report& b) {
  return "general " + std::to_string(b.general_bound) + ", structural " +
         (b.has_structural_bound ? std::to_string(b.structural_bound) : std::string("-")) +
         ", effective " + std::to_string(b.effective);
}

json witness_json(circ_witness_kind kind, std::int64_t first, std::int64_t second) {
  switch (kind) {
    case CIRC_WITNESS_VERTEX: return {{"vertex", first}};
    case CIRC_WITNESS_PAIR: return {{"pair", {first, second}}};
    case CIRC_WITNESS_NONE: break;
  }
  return nullptr;
}

std::string witness_str(circ_witness_kind kind, std::int64_t first, std::int64_t second) {
  switch (kind) {
    case CIRC_WITNESS_VERTEX: return "vertex " + std::to_string(first) + " has an empty shadow";
    case CIRC_WITNESS_PAIR:
      return "vertices " + std::to_string(first) + " and " + std::to_string(second) +
             " have equal shadows";
    case CIRC_WITNESS_NONE: break;
  }
  return "";
}

std::string size_formula(std::uint32_t n, circ_kind kind) {
  if (kind == CIRC_LOCATING) return n % 3 == 2 ? "ceil(n/3)+1" : "ceil(n/3)";
  return n % 11 == 8 ? "ceil(4n/11)+1" : "ceil(4n/11)";
}

void require_table_kind(circ_kind kind) {
  if (kind == CIRC_DOMINATING) {
    throw UsageError("constructions exist for locating and identifying codes only");
  }
}

// ---- command options ----

struct Common {
  bool json = false;
  std::string offsets = "1,3";
};

struct VerifyOpts {
  std::int64_t n = 0;
  std::string code;
  std::string kind = "identifying";
  bool shadows = false;
  bool shares = false;
  std::string heavy;
};

struct ConstructOpts {
  std::int64_t n = 0;
  std::string kind;
};

struct SearchOpts {
  std::int64_t n = 0;
  std::string kind;
  std::optional<std::int64_t> k;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  bool dihedral = false;
  std::optional<std::uint32_t> max_n;
  bool progress = false;
  bool naive = false;
};

struct TableOpts {
  std::string kind;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  bool csv = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  std::optional<std::uint32_t> max_n;
};

struct DensityOpts {
  std::int64_t period = 0;
  std::string residues;
  std::string kind;
};

struct BoundOpts {
  std::int64_t n = 0;
  std::string kind;
};

// What a command hands back: exit code, manifest payload, human text.
struct Report {
  int exit_code = kExitOk;
  RunParams params;
  json outcome = json::object();
  std::string text;
};

// ---- commands ----

Report cmd_verify(const Common& common, const VerifyOpts& o) {
  Report r;
  const auto offsets = parse_list(common.offsets, "offset");
  const auto members = parse_code_arg(o.code);
  const auto kind = parse_kind_arg(o.kind);
  std::optional<circ_rational> heavy;
  if (!o.heavy.empty()) heavy = parse_rational(o.heavy);

  auto graph = make_graph(o.n, offsets);
  auto code = make_code(graph.get(), members);
  circ_verification v{};
  check(circ_code_verify(code.get(), kind, &v));
  const auto sorted = members_of(code.get());
  const auto n = circ_graph_order(graph.get());

  r.params.n = n;
  r.params.offsets = fetch<std::int64_t>([&](std::int64_t* b, size_t cap, size_t* c) {
    return circ_graph_offsets(graph.get(), b, cap, c);
  });
  r.params.kind = circ_kind_string(kind);
  if (heavy) r.params.extra["heavy_threshold"] = rat_str(*heavy);

  r.outcome["code"] = sorted;
  r.outcome["size"] = sorted.size();
  r.outcome["status"] = circ_validity_string(v.status);
  r.outcome["valid"] = v.status == CIRC_VALID;
  r.outcome["witness"] = witness_json(v.witness, v.first, v.second);
  r.exit_code = v.status == CIRC_VALID ? kExitOk : kExitInvalid;

  std::ostringstream os;
  os << graph_str(n, r.params.offsets) << " code " << set_str(sorted) << " (size "
     << sorted.size() << ")\n";
  os << circ_kind_string(kind) << ": "
     << (v.status == CIRC_VALID ? "valid" : std::string("invalid (") +
                                                circ_validity_string(v.status) + ")")
     << "\n";
  if (v.witness != CIRC_WITNESS_NONE) {
    os << "witness: " << witness_str(v.witness, v.first, v.second) << "\n";
  }

  if (o.shadows) {
    json list = json::array();
    os << "shadows:\n";
    for (std::uint32_t u = 0; u < n; ++u) {
      const auto s = fetch<std::uint32_t>([&](std::uint32_t* b, size_t cap, size_t* c) {
        return circ_code_shadow(code.get(), u, b, cap, c);
      });
      list.push_back({{"owner", u}, {"members", s}});
      os << "  S_" << u << " = " << set_str(s) << "\n";
    }
    r.outcome["shadows"] = list;
  }

  if (o.shares) {
    circ_rational total{};
    if (circ_code_sum_of_shares(code.get(), &total) != CIRC_OK) {
      r.outcome["shares"] = {{"error", circ_last_error()}};
      os << "shares: undefined (" << circ_last_error() << ")\n";
    } else {
      json values = json::array();
      os << "shares:\n";
      for (auto u : sorted) {
        circ_rational s{};
        check(circ_code_share(code.get(), u, &s));
        values.push_back({{"vertex", u}, {"share", rat_str(s)}});
        os << "  share(" << u << ") = " << rat_str(s) << "\n";
      }
      r.outcome["shares"] = {{"values", values}, {"sum", rat_str(total)}};
      os << "  sum = " << rat_str(total) << "\n";
    }
  }

  if (heavy) {
    const auto hv = [&]() -> std::optional<std::vector<std::uint32_t>> {
      size_t count = 0;
      const auto st = circ_code_heavy_vertices(code.get(), *heavy, nullptr, 0, &count);
      if (st != CIRC_OK && st != CIRC_E_BUFFER_TOO_SMALL) return std::nullopt;
      return fetch<std::uint32_t>([&](std::uint32_t* b, size_t cap, size_t* c) {
        return circ_code_heavy_vertices(code.get(), *heavy, b, cap, c);
      });
    }();
    if (!hv) {
      r.outcome["heavy"] = {{"threshold", rat_str(*heavy)}, {"error", circ_last_error()}};
      os << "heavy: undefined (" << circ_last_error() << ")\n";
    } else {
      json list = json::array();
      os << "heavy (share > " << rat_str(*heavy) << "):";
      if (hv->empty()) os << " none";
      os << "\n";
      for (auto u : *hv) {
        circ_rational s{};
        check(circ_code_share(code.get(), u, &s));
        const auto p = fetch<std::uint32_t>([&](std::uint32_t* b, size_t cap, size_t* c) {
          return circ_code_profile(code.get(), u, b, cap, c);
        });
        list.push_back({{"vertex", u}, {"share", rat_str(s)}, {"profile", p}});
        os << "  " << u << ": share " << rat_str(s) << ", profile " << tuple_str(p) << "\n";
      }
      r.outcome["heavy"] = {{"threshold", rat_str(*heavy)}, {"vertices", list}};
    }
  }
  r.text = os.str();
  return r;
}

Report cmd_construct(const ConstructOpts& o) {
  Report r;
  const auto kind = parse_kind_arg(o.kind);
  require_table_kind(kind);
  std::uint32_t min_order = 0;
  check(circ_construction_min_order(kind, &min_order));
  if (o.n < min_order) {
    throw UsageError("the " + std::string(circ_kind_string(kind)) + " table starts at n=" +
                     std::to_string(min_order) + "; use 'circcodes search' for n=" +
                     std::to_string(o.n));
  }
  if (o.n > 1 << 14) throw UsageError("n=" + std::to_string(o.n) + " is too large");
  const auto n = static_cast<std::uint32_t>(o.n);

  circ_code* raw = nullptr;
  check(circ_construct(n, kind, &raw));
  const CodePtr code(raw);
  circ_verification v{};
  check(circ_code_verify(code.get(), kind, &v));
  std::uint32_t target = 0;
  check(circ_target_size(n, kind, &target));
  circ_bound_report bound{};
  check(circ_lower_bound(n, kind, &bound));
  const auto members = members_of(code.get());

  r.params.n = n;
  r.params.offsets = {1, 3};
  r.params.kind = circ_kind_string(kind);
  r.outcome = {{"code", members},
               {"size", members.size()},
               {"target", target},
               {"formula", size_formula(n, kind)},
               {"meets_target", members.size() == target},
               {"lower_bound", bound.effective},
               {"status", circ_validity_string(v.status)},
               {"valid", v.status == CIRC_VALID}};
  r.exit_code = v.status == CIRC_VALID ? kExitOk : kExitInvalid;

  std::ostringstream os;
  os << circ_kind_string(kind) << " code for " << graph_str(n, r.params.offsets) << ": "
     << set_str(members) << "\n";
  os << "size " << members.size() << ", target " << size_formula(n, kind) << " = " << target
     << (members.size() == target ? "" : " (not met)") << ", lower bound " << bound.effective
     << "\n";
  os << "verification: " << circ_validity_string(v.status) << "\n";
  r.text = os.str();
  return r;
}

void print_progress(const circ_search_progress* p, void* user) {
  auto& err = *static_cast<std::ostream*>(user);
  const double rate = p->elapsed_seconds > 0 ? p->candidates / p->elapsed_seconds : 0;
  err << "progress: k=" << p->size << " nodes=" << p->nodes << " candidates=" << p->candidates
      << " candidates/s=" << static_cast<std::uint64_t>(rate) << "\n";
}

circ_search_config search_config(circ_kind kind, std::optional<std::uint64_t> budget,
                                 unsigned threads, std::optional<std::uint32_t> max_n) {
  circ_search_config cfg;
  circ_search_config_init(&cfg);
  cfg.threads = threads;
  cfg.node_budget = budget.value_or(0);
  if (max_n) {
    if (kind == CIRC_DOMINATING) cfg.max_order_dominating = *max_n;
    if (kind == CIRC_LOCATING) cfg.max_order_locating = *max_n;
    if (kind == CIRC_IDENTIFYING) cfg.max_order_identifying = *max_n;
  }
  return cfg;
}

int outcome_exit(circ_outcome outcome) {
  switch (outcome) {
    case CIRC_OPTIMUM:
    case CIRC_FOUND: return kExitOk;
    case CIRC_NONE_AT_SIZE:
    case CIRC_NO_CODE: return kExitInvalid;
    case CIRC_BUDGET_EXCEEDED: return kExitBudget;
  }
  return kExitUsage;
}

Report cmd_search(const Common& common, const SearchOpts& o, std::ostream& err) {
  Report r;
  const auto offsets = parse_list(common.offsets, "offset");
  const auto kind = parse_kind_arg(o.kind);
  const auto budget = o.budget ? o.budget : budget_from_env();
  if (o.k && (*o.k < 1 || *o.k > o.n)) {
    throw UsageError("--k must lie in [1, n]");
  }
  if (o.naive && o.k) throw UsageError("--naive and --k cannot be combined");
  if (o.threads == 0) throw UsageError("--threads must be positive");

  auto graph = make_graph(o.n, offsets);
  auto cfg = search_config(kind, budget, o.threads, o.max_n);
  cfg.dihedral = o.dihedral ? 1 : 0;
  if (o.progress) {
    cfg.progress = print_progress;
    cfg.progress_user_data = &err;
    cfg.progress_interval = std::uint64_t{1} << 20;
  }

  circ_search_result* raw = nullptr;
  std::string mode;
  if (o.naive) {
    mode = "naive";
    check(circ_search_naive(graph.get(), kind, &raw));
  } else if (o.k) {
    mode = "exists";
    check(circ_search_exists(graph.get(), kind, static_cast<std::uint32_t>(*o.k), &cfg, &raw));
  } else {
    mode = "min";
    check(circ_search_min(graph.get(), kind, &cfg, &raw));
  }
  const Result result(raw);

  const auto n = circ_graph_order(graph.get());
  r.params.n = n;
  r.params.offsets = fetch<std::int64_t>([&](std::int64_t* b, size_t cap, size_t* c) {
    return circ_graph_offsets(graph.get(), b, cap, c);
  });
  r.params.kind = circ_kind_string(kind);
  if (o.k) r.params.k = static_cast<std::uint32_t>(*o.k);
  r.params.budget = budget;
  r.params.threads = o.threads;
  r.params.extra = {{"mode", mode}, {"dihedral", o.dihedral}};
  if (o.max_n) r.params.extra["max_n"] = *o.max_n;

  const auto outcome = circ_result_outcome(result.get());
  const auto size = circ_result_size(result.get());
  circ_code* cert_raw = nullptr;
  check(circ_result_certificate(result.get(), &cert_raw));
  const CodePtr cert(cert_raw);
  circ_bound_report bounds{};
  check(circ_result_bounds(result.get(), &bounds));
  circ_search_stats stats{};
  check(circ_result_stats(result.get(), &stats));
  const auto refuted = fetch<std::uint32_t>([&](std::uint32_t* b, size_t cap, size_t* c) {
    return circ_result_refuted_sizes(result.get(), b, cap, c);
  });
  std::vector<std::uint32_t> cert_members;
  if (cert) cert_members = members_of(cert.get());

  r.outcome = {{"outcome", circ_outcome_string(outcome)},
               {"size", size},
               {"certificate", cert ? json(cert_members) : json(nullptr)},
               {"bounds", bounds_json(bounds)},
               {"refuted_sizes", refuted},
               {"stats",
                {{"nodes", stats.nodes},
                 {"candidates", stats.candidates},
                 {"pruned_symmetry", stats.pruned_symmetry},
                 {"pruned_bound", stats.pruned_bound}}}};
  r.exit_code = outcome_exit(outcome);

  std::ostringstream os;
  os << graph_str(n, r.params.offsets) << " " << circ_kind_string(kind);
  if (o.k) os << " k=" << *o.k;
  os << ": ";
  switch (outcome) {
    case CIRC_OPTIMUM: os << "optimum " << size << "\n"; break;
    case CIRC_FOUND: os << "found a code of size " << size << "\n"; break;
    case CIRC_NONE_AT_SIZE: os << "none of size " << size << " (exhaustive)\n"; break;
    case CIRC_NO_CODE: os << "no " << circ_kind_string(kind) << " code exists\n"; break;
    case CIRC_BUDGET_EXCEEDED:
      if (stats.nodes == 0) {
        os << "not settled: n is above the exact-search limit (see --max-n)\n";
      } else {
        os << "budget exceeded while searching size " << size << "\n";
      }
      break;
  }
  if (cert) {
    os << (outcome == CIRC_BUDGET_EXCEEDED ? "best known: " : "certificate: ")
       << set_str(cert_members) << "\n";
  }
  os << "bounds: " << bounds_str(bounds) << "\n";
  if (!refuted.empty()) os << "refuted sizes: " << set_str(refuted) << "\n";
  os << "search: " << stats.nodes << " nodes, " << stats.candidates << " candidates, "
     << stats.pruned_symmetry << " symmetry prunes, " << stats.pruned_bound << " bound prunes, "
     << stats.wall_seconds << " s\n";
  r.text = os.str();
  return r;
}

Report cmd_table(const TableOpts& o) {
  Report r;
  const auto kind = parse_kind_arg(o.kind);
  require_table_kind(kind);
  const auto budget = o.budget ? o.budget : budget_from_env();
  if (o.threads == 0) throw UsageError("--threads must be positive");
  circ_search_config defaults;
  circ_search_config_init(&defaults);
  const std::int64_t from = o.from.value_or(7);
  const std::int64_t to =
      o.to.value_or(o.max_n.value_or(kind == CIRC_LOCATING ? defaults.max_order_locating
                                                           : defaults.max_order_identifying));
  if (from < 7 || to < from || to > 1 << 14) {
    throw UsageError("bad range " + std::to_string(from) + ".." + std::to_string(to) +
                     " (need 7 <= from <= to)");
  }
  std::uint32_t min_order = 0;
  check(circ_construction_min_order(kind, &min_order));
  const auto cfg = search_config(kind, budget, o.threads, o.max_n);

  r.params.offsets = {1, 3};
  r.params.kind = circ_kind_string(kind);
  r.params.budget = budget;
  r.params.threads = o.threads;
  r.params.extra = {{"from", from}, {"to", to}};
  if (o.max_n) r.params.extra["max_n"] = *o.max_n;

  const std::vector<std::string> columns = {
      "n",        "lower_bound",    "target",       "construction_size", "construction_valid",
      "optimum",  "optimum_status", "target_is_optimum", "construction_is_optimum", "flags"};
  std::vector<std::vector<std::string>> cells;
  json rows = json::array();
  for (auto n = static_cast<std::uint32_t>(from); n <= to; ++n) {
    circ_bound_report bound{};
    check(circ_lower_bound(n, kind, &bound));
    json row = {{"n", n}, {"lower_bound", bound.effective}};

    std::optional<std::uint32_t> target, csize;
    std::optional<bool> cvalid;
    if (n >= min_order) {
      target.emplace();
      check(circ_target_size(n, kind, &*target));
      circ_code* raw = nullptr;
      check(circ_construct(n, kind, &raw));
      const CodePtr code(raw);
      circ_verification v{};
      check(circ_code_verify(code.get(), kind, &v));
      csize = static_cast<std::uint32_t>(circ_code_size(code.get()));
      cvalid = v.status == CIRC_VALID;
    }

    std::optional<std::uint32_t> optimum;
    std::string status;
    if (n <= 64) {
      const auto graph = make_graph(n, {1, 3});
      circ_search_result* raw = nullptr;
      check(circ_search_min(graph.get(), kind, &cfg, &raw));
      const Result res(raw);
      const auto out = circ_result_outcome(res.get());
      status = circ_outcome_string(out);
      if (out == CIRC_OPTIMUM) optimum = circ_result_size(res.get());
    } else {
      status = "budget_exceeded";
    }

    std::vector<std::string> flags;
    if (kind == CIRC_LOCATING) {
      if (n % 3 == 2) flags.push_back("2mod3");
      if (n % 6 == 2) flags.push_back("2mod6");
    } else if (n % 11 == 8) {
      flags.push_back("8mod11");
    }
    auto opt_cmp = [&](const std::optional<std::uint32_t>& v) -> std::optional<bool> {
      if (!v || !optimum) return std::nullopt;
      return *v == *optimum;
    };
    const auto target_match = opt_cmp(target);
    const auto construction_match = opt_cmp(csize);

    auto to_j = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    row["target"] = to_j(target);
    row["construction_size"] = to_j(csize);
    row["construction_valid"] = to_j(cvalid);
    row["optimum"] = to_j(optimum);
    row["optimum_status"] = status;
    row["target_is_optimum"] = to_j(target_match);
    row["construction_is_optimum"] = to_j(construction_match);
    row["flags"] = flags;
    rows.push_back(row);

    auto s_num = [](const std::optional<std::uint32_t>& v) {
      return v ? std::to_string(*v) : std::string();
    };
    auto s_bool = [](const std::optional<bool>& v) {
      return v ? std::string(*v ? "yes" : "no") : std::string();
    };
    std::string flag_cell;
    for (std::size_t i = 0; i < flags.size(); ++i) flag_cell += (i ? ";" : "") + flags[i];
    cells.push_back({std::to_string(n), std::to_string(bound.effective), s_num(target),
                     s_num(csize), s_bool(cvalid), s_num(optimum), status, s_bool(target_match),
                     s_bool(construction_match), flag_cell});
  }
  r.outcome = {{"columns", columns}, {"rows", rows}};

  std::ostringstream os;
  if (o.csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  } else {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : cells)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
      std::string text;
      for (std::size_t i = 0; i < row.size(); ++i) {
        text += (i ? "  " : "") + row[i];
        if (i + 1 < row.size()) text += std::string(width[i] - row[i].size(), ' ');
      }
      text.erase(text.find_last_not_of(' ') + 1);
      os << text << "\n";
    };
    line(columns);
    for (const auto& row : cells) line(row);
  }
  r.text = os.str();
  return r;
}

Report cmd_density(const Common& common, const DensityOpts& o) {
  Report r;
  if (o.period <= 0 || o.period > 1 << 20) throw UsageError("--period must be in [1, 2^20]");
  const auto period = static_cast<std::uint32_t>(o.period);
  const auto residues = parse_list(o.residues, "residue");
  const auto kind = parse_kind_arg(o.kind);
  const auto raw_offsets = parse_list(common.offsets, "offset");
  std::vector<std::uint32_t> offsets;
  for (auto d : raw_offsets) {
    if (d <= 0 || d > 1 << 20) throw UsageError("offsets must be positive");
    offsets.push_back(static_cast<std::uint32_t>(d));
  }

  circ_rational dens{};
  check(circ_periodic_density(period, residues.data(), residues.size(), &dens));
  circ_periodic_verification v{};
  check(circ_periodic_verify(period, residues.data(), residues.size(), kind, offsets.data(),
                             offsets.size(), &v));

  std::optional<circ_rational> floor;
  auto sorted = raw_offsets;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == std::vector<std::int64_t>{1, 3}) {
    if (kind == CIRC_LOCATING) floor = circ_rational{1, 3};
    if (kind == CIRC_IDENTIFYING) floor = circ_rational{4, 11};
  }
  std::string comparison;
  if (floor) {
    __extension__ typedef __int128 Wide;
    const Wide lhs = Wide(dens.num) * floor->den;
    const Wide rhs = Wide(floor->num) * dens.den;
    comparison = lhs == rhs ? "meets" : lhs > rhs ? "above" : "below";
  }

  r.params.offsets = raw_offsets;
  r.params.kind = circ_kind_string(kind);
  std::vector<std::int64_t> res_sorted = residues;
  std::sort(res_sorted.begin(), res_sorted.end());
  res_sorted.erase(std::unique(res_sorted.begin(), res_sorted.end()), res_sorted.end());
  r.params.extra = {{"period", period}, {"residues", res_sorted}};
  r.outcome = {{"density", rat_str(dens)},
               {"status", circ_validity_string(v.status)},
               {"valid", v.status == CIRC_VALID},
               {"witness", witness_json(v.witness, v.first, v.second)},
               {"floor", floor ? json(rat_str(*floor)) : json(nullptr)},
               {"floor_comparison", floor ? json(comparison) : json(nullptr)}};
  r.exit_code = v.status == CIRC_VALID ? kExitOk : kExitInvalid;

  std::ostringstream os;
  os << "period " << period << " residues " << set_str(res_sorted) << ": density "
     << rat_str(dens) << "\n";
  os << circ_kind_string(kind) << " in " << graph_str(0, raw_offsets).replace(2, 1, "inf")
     << ": "
     << (v.status == CIRC_VALID ? "valid" : std::string("invalid (") +
                                                circ_validity_string(v.status) + ")")
     << "\n";
  if (v.witness != CIRC_WITNESS_NONE) {
    os << "witness: " << witness_str(v.witness, v.first, v.second) << "\n";
  }
  if (floor) {
    os << "density floor " << rat_str(*floor) << ": "
       << (comparison == "meets" ? "meets the floor exactly"
                                 : comparison == "above" ? "above the floor" : "below the floor")
       << "\n";
  }
  r.text = os.str();
  return r;
}

Report cmd_bound(const Common& common, const BoundOpts& o) {
  Report r;
  const auto offsets = parse_list(common.offsets, "offset");
  const auto kind = parse_kind_arg(o.kind);
  auto graph = make_graph(o.n, offsets);
  circ_bound_report b{};
  check(circ_graph_lower_bound(graph.get(), kind, &b));
  const auto n = circ_graph_order(graph.get());
  r.params.n = n;
  r.params.offsets = fetch<std::int64_t>([&](std::int64_t* buf, size_t cap, size_t* c) {
    return circ_graph_offsets(graph.get(), buf, cap, c);
  });
  r.params.kind = circ_kind_string(kind);
  r.outcome = bounds_json(b);
  r.text = graph_str(n, r.params.offsets) + " " + circ_kind_string(kind) +
           " lower bound: " + bounds_str(b) + "\n";
  return r;
}

void add_common(CLI::App* cmd, Common& common, bool offsets) {
  cmd->add_flag("--json", common.json, "Print the v1 JSON run manifest instead of text");
  if (offsets) {
    cmd->add_option("--offsets", common.offsets, "Comma-separated offsets")
        ->capture_default_str();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locating and identifying codes in circulant graphs", "circcodes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", circ_version());

  Common common;
  VerifyOpts vo;
  ConstructOpts co;
  SearchOpts so;
  TableOpts to;
  DensityOpts dop;
  BoundOpts bo;

  auto* verify = app.add_subcommand("verify", "Check a vertex set for a code property");
  verify->add_option("-n,--n", vo.n, "Order of the circulant")->required();
  verify->add_option("--code", vo.code, "Vertices, comma-separated, or @file")->required();
  verify->add_option("--kind", vo.kind, "dominating, locating or identifying")
      ->capture_default_str();
  verify->add_flag("--shadows", vo.shadows, "List every shadow");
  verify->add_flag("--shares", vo.shares, "List shares of code vertices");
  verify->add_option("--heavy", vo.heavy, "List code vertices with share above THRESH (e.g. 11/4)");
  add_common(verify, common, true);

  auto* construct = app.add_subcommand("construct", "Emit the table code for C(n;1,3)");
  construct->add_option("-n,--n", co.n, "Order")->required();
  construct->add_option("--kind", co.kind, "locating or identifying")->required();
  add_common(construct, common, false);

  auto* search = app.add_subcommand("search", "Exact minimum or fixed-size existence search");
  search->add_option("-n,--n", so.n, "Order")->required();
  search->add_option("--kind", so.kind, "dominating, locating or identifying")->required();
  search->add_option("--k", so.k, "Only decide whether a code of exactly K vertices exists");
  search->add_option("--budget", so.budget,
                     std::string("Node budget (default from ") + kBudgetEnv + ", else none)");
  search->add_option("--threads", so.threads, "Worker threads")->capture_default_str();
  search->add_flag("--dihedral", so.dihedral, "Also reduce by reflections");
  search->add_option("--max-n", so.max_n, "Largest order to settle exactly");
  search->add_flag("--progress", so.progress, "Report progress on stderr");
  search->add_flag("--naive", so.naive, "Use the unpruned reference enumeration (n <= 16)");
  add_common(search, common, true);

  auto* table = app.add_subcommand("table", "Bounds, constructions and optima over a range");
  table->add_option("--kind", to.kind, "locating or identifying")->required();
  table->add_option("--from", to.from, "First order (default 7)");
  table->add_option("--to", to.to, "Last order (default: largest exactly searched order)");
  table->add_flag("--csv", to.csv, "CSV output");
  table->add_option("--budget", to.budget, "Node budget per order");
  table->add_option("--threads", to.threads, "Worker threads")->capture_default_str();
  table->add_option("--max-n", to.max_n, "Largest order to settle exactly");
  add_common(table, common, false);

  auto* density = app.add_subcommand("density", "Density and validity of a periodic code");
  density->add_option("--period", dop.period, "Period")->required();
  density->add_option("--residues", dop.residues, "Residues, comma-separated")->required();
  density->add_option("--kind", dop.kind, "dominating, locating or identifying")->required();
  add_common(density, common, true);

  auto* bound = app.add_subcommand("bound", "Lower bounds on the code size");
  bound->add_option("-n,--n", bo.n, "Order")->required();
  bound->add_option("--kind", bo.kind, "dominating, locating or identifying")->required();
  add_common(bound, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunManifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::string error;
  try {
    if (*verify) report = cmd_verify(common, vo);
    if (*construct) report = cmd_construct(co);
    if (*search) report = cmd_search(common, so, err);
    if (*table) report = cmd_table(to);
    if (*density) report = cmd_density(common, dop);
    if (*bound) report = cmd_bound(common, bo);
  } catch (const UsageError& e) {
    error = e.what();
  } catch (const ApiError& e) {
    error = e.what();
  } catch (const std::exception& e) {
    error = e.what();
  }
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!error.empty()) {
    err << "error: " << error << "\n";
    report = Report{};
    report.exit_code = kExitUsage;
    report.outcome = {{"error", error}};
  }
  manifest.params = report.params;
  manifest.outcome = report.outcome;
  manifest.exit_code = report.exit_code;
  if (common.json) {
    out << json(manifest).dump(2) << "\n";
  } else {
    out << report.text;
  }
  return report.exit_code;
}

}  // namespace circ_cli
