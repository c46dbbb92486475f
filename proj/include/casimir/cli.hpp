#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitIo = 4;

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal text that parses back to exactly x.
std::string format_double(double x);

}  // namespace casimir::cli
