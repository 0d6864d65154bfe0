#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hornlab::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2, kUnbounded = 3, kPartial = 4 };

/// Runs the command line `args` (without the program name); normal output
/// goes to `out` unless a command writes a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornlab::cli
