#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gardner::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line (args excludes the program name). Output goes to
/// out, diagnostics to err; stdin is read for the board file "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gardner::cli
