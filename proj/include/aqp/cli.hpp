#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aqp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default --max-order.
inline constexpr const char* kMaxOrderEnv = "AQP_MAX_ORDER";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqp::cli
