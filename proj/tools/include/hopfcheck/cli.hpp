#pragma once

#include <string>
#include <vector>

namespace hopfcheck::cli {

enum ExitCode : int { kAllPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct CliResult {
  int exit_code = kAllPass;
  std::string out;
  std::string err;
};

/// Runs the command line `args` (without the program name) and captures its output.
CliResult run(const std::vector<std::string>& args);

}  // namespace hopfcheck::cli
