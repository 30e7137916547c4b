#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critcross {

enum ExitCode : int {
  kExitOk = 0,
  kExitConstraint = 1,
  kExitUsage = 2,
  kExitExceeded = 3,
};

/// Runs the command line `args` (without the program name). Returns the exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace critcross
