#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcn {

/// Exit statuses of the gcn tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitTheoremFailed = 1,
  kExitBadInput = 2,  // malformed input, failed generation or an unwritable output
  kExitBadArguments = 3,
  kExitNotCorrect = 4,
  kExitTooFewNodes = 5,
  kExitInternal = 6,
};

/// Runs the tool on args (without the program name), writing reports to out
/// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcn
