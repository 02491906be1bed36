#pragma once

#include "appell/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

// Test-build hook: corrupts one entry of a named production table right after
// it is built, so the verify suite can be shown to catch a bad cache. Without
// APPELL_TEST_HOOKS every function here is a no-op.
namespace appell::fault {

inline constexpr std::string_view kSumMoments = "sum-moments";
inline constexpr std::string_view kStirling = "stirling";
inline constexpr std::string_view kClassicalStirling = "classical-stirling";

bool hooks_enabled();

/// Arms the hook for one table name; empty string disarms. Throws UsageError
/// for unknown names or when hooks are compiled out.
void arm(std::string_view table);
std::string armed();

/// If `table` is armed, changes the last numerator digit of entry [2][1].
/// Tables with fewer rows or columns are left alone.
void maybe_corrupt(std::string_view table, std::vector<std::vector<Rational>>& values);

}  // namespace appell::fault
