#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tca::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
};

/// Runs one command line (without the program name).  Results go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tca::cli
