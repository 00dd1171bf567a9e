#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathcolor::cli {

inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Everything is written
/// to `out` / `err`; the return value is the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathcolor::cli
