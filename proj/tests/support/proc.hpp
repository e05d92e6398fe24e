#pragma once

// Runs the built CLI binary and captures its output, for the end-to-end
// acceptance checks.

#include <string>
#include <vector>

namespace structmap::testing {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs an executable with arguments through the shell, capturing stdout
/// and stderr separately.
ProcessResult run_process(const std::string& exe,
                          const std::vector<std::string>& args);

}  // namespace structmap::testing
