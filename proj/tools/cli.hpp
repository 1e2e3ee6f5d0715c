#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirling::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kEmptyOrUnreachable = 3,
  kHypothesisNotMet = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirling::cli
