#pragma once

#include <ostream>

namespace trigpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsage = 2,
  kPrecision = 3,
  kIo = 4,
  kInconclusive = 5,
};

/// Runs the command line in-process; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigpoly::cli
