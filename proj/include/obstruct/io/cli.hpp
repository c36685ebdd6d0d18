#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obstruct {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitDiscrepancy = 1, kExitInputError = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obstruct
