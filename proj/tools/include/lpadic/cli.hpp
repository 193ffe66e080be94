#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpadic::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kPrecision = 3,
};

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpadic::cli
