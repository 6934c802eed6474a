#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ldp {

enum ExitCode : int {
    exit_success = 0,
    exit_usage = 1,
    exit_input = 2,
    exit_negative = 3,
    exit_limit = 4,
};

// Runs one subcommand. args excludes the program name. Results go to out,
// diagnostics and traces to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldp
