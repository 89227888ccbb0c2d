#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spoofscan {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitIo = 2 };

/// Runs the command line `args` (without the program name). Machine-readable
/// output goes to out; progress and diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spoofscan
