#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kRefused = 3,
};

// Runs the `sfg` command line with args (without the program name) and
// returns the process exit code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfg::cli
