#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ineq::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineq::cli
