#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gccaut {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBuild = 3,
  kExitRefused = 4,
  kExitFailed = 5,
};

/// "1s", "500ms", "2m" -> milliseconds; nullopt if malformed.
std::optional<std::chrono::milliseconds> parse_budget(const std::string& text);

/// Runs one command; args exclude the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gccaut
