#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starlit {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,    // verification found a violation, or fuzz failures
  kExitInput = 2,     // unreadable input, bad flags, non-subcubic graph
  kExitInternal = 3,  // an internal invariant broke; a bundle was written
};

/// Runs the tool with `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlit
