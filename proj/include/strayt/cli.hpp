#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strayt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNotInSemigroup = 3,
  kNotAPermutatorWord = 4,
  kTruncated = 5,
  kEnumerationLimit = 6,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace strayt::cli
