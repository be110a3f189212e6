#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace armatch::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kTooLarge = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace armatch::cli
