#pragma once

#include <string>
#include <vector>

namespace kpzlab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNumeric = 2 };

/// Parses `args` (args[0] is the program name), runs one subcommand and
/// returns its exit code. Diagnostics go to standard error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

/// Reads a flat key=value file. Blank lines and lines starting with '#' are
/// skipped; malformed lines throw InvalidInput.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

}  // namespace kpzlab
