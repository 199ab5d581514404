#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cascade::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { exit_ok = 0, exit_error = 1, exit_outside_regime = 2 };

/// Run the tool on `args` (program name excluded). Data goes to `out` unless
/// --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cascade::cli
