#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace besstruve {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadInput = 2,
  kExitNoConvergence = 3,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besstruve
