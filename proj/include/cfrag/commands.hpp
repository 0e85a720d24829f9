#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfrag {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInput = 2,      // parse errors, element outside the neighbourhood or log domain
  kExitGeometry = 3,   // invalid cover or cover file
  kExitAliasing = 4,   // grid too coarse
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfrag
