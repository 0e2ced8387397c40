#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xlbp::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes: 0 all checks pass, 1 a check or certification failed,
// 2 bad usage or a parameter pole.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xlbp::cli
