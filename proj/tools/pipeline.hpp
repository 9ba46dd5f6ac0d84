#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectrograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` unless --output names a file; errors are reported on `err` as a JSON
/// object and mapped to exit code 2 (bad input) or 3 (numerical failure).
int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectrograph::cli
