#pragma once

#include <string>
#include <vector>

namespace pf {

struct CliResult {
    int exit_code;       // 0 success, 1 domain/usage error, 2 verification failure
    std::string output;  // serialized JSON (or error message)
};

/// Dispatch one subcommand. Exposed as a library call so the CLI surface is
/// testable without spawning processes.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace pf
