#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace progress_lab::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to files under --out; logs go to standard error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace progress_lab::cli
