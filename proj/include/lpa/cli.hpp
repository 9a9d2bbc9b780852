#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kPreconditionViolated = 1,
  kOracleBoundExceeded = 2,
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
