#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wordrep::cli {

/// Exit statuses of the `wg` tool.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  ///< the question was answered "no"
  kUsage = 2,
  kBudget = 3,
  kInternal = 4,
};

/// Runs `wg` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordrep::cli
