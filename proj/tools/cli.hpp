#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace condep::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kResource = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace condep::cli
