#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syncx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Run one command line (without the program name).
/// Returns 0 on success, 1 when a claim or property fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syncx::cli
