#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace telescope::cli {

/// Test-only fault injection.
struct CliHooks {
    /// Identity whose summand is negated before verification.
    std::optional<std::string> corrupt_identity;
};

/// Runs one command line (without the program name). Returns 0 when every
/// check passes, 1 on a verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace telescope::cli
