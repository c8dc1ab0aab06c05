#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intfn::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kOverflow = 4,
  kPrecondition = 5,
};

// Runs one command line (without the program name) and returns the exit
// status. Normal output goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intfn::cli
