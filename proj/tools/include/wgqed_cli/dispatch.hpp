#pragma once

#include <string>
#include <vector>

namespace wgqed::cli {

inline constexpr const char *tool_version = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1,
    exit_numerical = 2,
    exit_io = 3,
};

/// Runs one command line (argv[0] is the program name) and returns the exit code.
/// Diagnostics go to stderr as a single line; data goes to --out or stdout.
int dispatch(int argc, const char *const *argv);
int dispatch(const std::vector<std::string> &args);

} // namespace wgqed::cli
