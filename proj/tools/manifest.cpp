#include "manifest.hpp"

#include <stdexcept>

namespace circ_cli {

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

void to_json(nlohmann::json& j, const RunParams& p) {
  j = nlohmann::json{
      {"n", optional_json(p.n)},
      {"offsets", p.offsets},
      {"kind", optional_json(p.kind)},
      {"k", optional_json(p.k)},
      {"budget", optional_json(p.budget)},
      {"threads", optional_json(p.threads)},
      {"seed", optional_json(p.seed)},
      {"extra", p.extra},
  };
}

void from_json(const nlohmann::json& j, RunParams& p) {
  p.n = optional_from<std::uint32_t>(j, "n");
  p.offsets = j.at("offsets").get<std::vector<std::int64_t>>();
  p.kind = optional_from<std::string>(j, "kind");
  p.k = optional_from<std::uint32_t>(j, "k");
  p.budget = optional_from<std::uint64_t>(j, "budget");
  p.threads = optional_from<unsigned>(j, "threads");
  p.seed = optional_from<std::uint64_t>(j, "seed");
  p.extra = j.at("extra");
}

void to_json(nlohmann::json& j, const RunManifest& m) {
  j = nlohmann::json{
      {"schema", m.schema},
      {"command", m.command},
      {"params", m.params},
      {"outcome", m.outcome},
      {"exit_code", m.exit_code},
      {"timing", {{"wall_seconds", m.wall_seconds}}},
  };
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  m.schema = j.at("schema").get<std::string>();
  if (m.schema != kManifestSchema) {
    throw std::invalid_argument("unsupported manifest schema '" + m.schema + "'");
  }
  m.command = j.at("command").get<std::string>();
  m.params = j.at("params").get<RunParams>();
  m.outcome = j.at("outcome");
  m.exit_code = j.at("exit_code").get<int>();
  m.wall_seconds = j.at("timing").at("wall_seconds").get<double>();
}

}  // namespace circ_cli
