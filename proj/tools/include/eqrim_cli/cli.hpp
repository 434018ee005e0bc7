#pragma once

#include <iosfwd>

namespace eqrim::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInvariant = 3,
  kOutsideBox = 4,
};

/// Runs the eqrim command line. Never throws; errors become exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqrim::cli
