#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssbchoice::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing the
/// report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssbchoice::cli
