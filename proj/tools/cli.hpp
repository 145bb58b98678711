#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ckbound::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kNumeric = 3,
  kExceedance = 10,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckbound::cli
