#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace nilharm::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kInvariantFailure = 2,
  kInternalInconsistency = 3,
};

/// Runs one command line (args[0] is the program name). Text goes to `out`,
/// diagnostics to `err`; JSON reports go to the --json path ("-" for `out`).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nilharm::cli
