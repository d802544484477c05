#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace circ_cli {

inline constexpr const char* kManifestSchema = "v1";

/// Parameters common to all commands; absent ones serialize as null.
/// Command-specific inputs (table range, periodic residues, ...) go in extra.
struct RunParams {
  std::optional<std::uint32_t> n;
  std::vector<std::int64_t> offsets;
  std::optional<std::string> kind;
  std::optional<std::uint32_t> k;
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const RunParams&) const = default;
};

/// One command invocation: what was asked, what came out, how long it took.
struct RunManifest {
  std::string schema = kManifestSchema;
  std::string command;
  RunParams params;
  nlohmann::json outcome = nlohmann::json::object();
  int exit_code = 0;
  double wall_seconds = 0;

  bool operator==(const RunManifest&) const = default;
};

void to_json(nlohmann::json& j, const RunParams& p);
void from_json(const nlohmann::json& j, RunParams& p);
void to_json(nlohmann::json& j, const RunManifest& m);
/// Throws nlohmann::json::exception on missing fields and std::invalid_argument
/// on an unknown schema version.
void from_json(const nlohmann::json& j, RunManifest& m);

}  // namespace circ_cli
