#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domset::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInputError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point with at least one decimal and at most four, trailing zeros trimmed.
std::string format_ratio(double v);

} // namespace domset::cli
