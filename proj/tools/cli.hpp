#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgo::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidConfig = 2,
  kSizeGuard = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgo::cli
