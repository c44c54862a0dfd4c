#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qts::cli {

// Exit codes: 0 success, 1 violation under --strict, 2 usage or invalid
// input, 3 resource or internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qts::cli
