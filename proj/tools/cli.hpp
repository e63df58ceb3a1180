#pragma once

#include <ostream>

namespace sbg::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailed = 1,
  kMalformedInput = 2,
  /// CapExceeded or ZeroDivisor reported inside an otherwise successful payload.
  kSurfacedError = 3,
};

/// Parses argv, runs one subcommand, writes a JSON payload to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbg::cli
