#pragma once

#include <iosfwd>

namespace credfusion::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kTotalConflict = 3,
  kNotConverged = 4,
  kOutputError = 5,
  kSchemaError = 6,
};

/// Runs the credfuse command line with explicit streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace credfusion::cli
