#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclo::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
