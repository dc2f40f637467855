#pragma once

#include <ostream>

namespace fcube::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kGuardExceeded = 2,
  kVerificationFailed = 3,
};

// Runs one command line. Results go to `out` unless a file flag redirects
// them; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fcube::cli
