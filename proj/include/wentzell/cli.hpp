#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace wentzell::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_config = 2,
    exit_solver_failure = 3,
    exit_theorem_violation = 4,
};

// Invalid flag values or combinations, detected before any computation starts.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Runs one command line given without the program name. Reports go to the --out
// file when one is given and to `out` otherwise; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wentzell::cli
