#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Runs one CLI invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcodes::cli
