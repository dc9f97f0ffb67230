#pragma once

#include <ostream>

namespace pkaeq::cli {

/// Exit codes of the `check` subcommand; `witness` uses 0 (found) / 1 (none).
enum ExitCode : int {
  kEquivalent = 0,
  kNotEquivalent = 1,
  kInputError = 2,
  kResourceError = 3,
};

/// Runs the command line tool with explicit output streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pkaeq::cli
