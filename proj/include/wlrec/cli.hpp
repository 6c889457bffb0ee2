#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlrec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrecisionEnv = "WLREC_PRECISION_BITS";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistency = 3;

/// Runs the command line `args` (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:steps", both ends included.
std::vector<double> parse_grid(const std::string& text);

}  // namespace wlrec
