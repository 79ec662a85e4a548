#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpluq::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O error or failed verification
  kUsage = 2,    // bad arguments or unparsable input
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpluq::cli
