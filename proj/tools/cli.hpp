#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circ_cli {

/// Exit codes of the circcodes tool.
enum ExitCode : int {
  kExitOk = 0,         // success, or the checked property holds
  kExitInvalid = 1,    // the property fails / no code of the requested size
  kExitUsage = 2,      // malformed input or unsupported request
  kExitBudget = 3,     // search gave up before settling the question
};

/// Environment variable holding the default search node budget.
inline constexpr const char* kBudgetEnv = "CIRCCODES_BUDGET";

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circ_cli
