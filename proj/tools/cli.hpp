#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace appell::cli {

// Frozen exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInputFile = 3;
inline constexpr int kExitDomain = 4;

/// Runs one invocation. Documents go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace appell::cli
