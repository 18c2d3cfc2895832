#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dualmin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  ///< not equivalent / selftest failure
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualmin::cli
