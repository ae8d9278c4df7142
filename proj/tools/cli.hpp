#pragma once

#include <iosfwd>

namespace chg::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kVerificationFailed = 2,
  kResourceCap = 3,
  kParameterError = 4,
  kRetryExhausted = 5,
};

// Parses argv, runs one subcommand, writes a single JSON report to `out` and
// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chg::cli
