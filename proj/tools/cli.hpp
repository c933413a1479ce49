#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hamfix::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamfix::cli
