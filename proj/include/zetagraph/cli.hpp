#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command; `args` excludes the program name. JSON (or CSV with
/// --curve) goes to `out`, warnings and a one-line summary to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ZETAGRAPH_BUDGET if set to a positive integer, the default budget otherwise.
std::uint64_t budget_from_env();

}  // namespace zg
