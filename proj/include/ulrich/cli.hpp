#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ulrich::cli {

/// Exit codes: 0 decided, 1 input error, 2 some verdict undecided.
enum ExitCode : int { ok = 0, input_error = 1, undecided = 2 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulrich::cli
