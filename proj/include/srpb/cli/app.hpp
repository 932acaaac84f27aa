#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srpb {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification = 1,
    exit_input = 2,
    exit_exhausted = 3,
};

/// Runs one srpb command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace srpb
