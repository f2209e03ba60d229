#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsum::cli {

enum ExitCode : int {
  kOk = 0,
  kCertificationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qsum::cli
