#pragma once

#include <iosfwd>

namespace solenoid::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,      // malformed flags or invalid input
    kExitDomain = 3,     // e.g. structure constants violating the Jacobi identity
    kExitNumerical = 4,  // non-finite state or a failed numerical search
};

/// Parses argv and runs one subcommand. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solenoid::cli
