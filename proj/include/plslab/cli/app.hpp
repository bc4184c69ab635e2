#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plslab::cli {

/// Exit codes of every subcommand.
enum ExitCode : int {
    kOk = 0,
    kViolations = 1,
    kUsage = 2,
    kCap = 3,
};

/// Runs the plslab command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plslab::cli
