#include "appell/fault.hpp"

#include "appell/errors.hpp"

#include <mutex>

namespace appell::fault {

namespace {

std::mutex g_mutex;
std::string g_armed;

}  // namespace

bool hooks_enabled() {
#ifdef APPELL_TEST_HOOKS
  return true;
#else
  return false;
#endif
}

void arm(std::string_view table) {
  if (!hooks_enabled()) throw UsageError("fault injection is not compiled into this build");
  if (!table.empty() && table != kSumMoments && table != kStirling && table != kClassicalStirling) {
    throw UsageError("unknown fault-injection table '" + std::string(table) +
                     "' (expected sum-moments, stirling or classical-stirling)");
  }
  std::lock_guard lock(g_mutex);
  g_armed = std::string(table);
}

std::string armed() {
  std::lock_guard lock(g_mutex);
  return g_armed;
}

void maybe_corrupt([[maybe_unused]] std::string_view table,
                   [[maybe_unused]] std::vector<std::vector<Rational>>& values) {
#ifdef APPELL_TEST_HOOKS
  if (armed() != table || values.size() < 3) return;
  // Entry [2][1] is nonzero in every table this hook targets for non-degenerate laws.
  auto& row = values[2];
  if (row.size() < 2) return;
  Rational& cell = row[1];
  std::string digits = cell.numerator().get_str();
  char& last = digits.back();
  last = last == '9' ? '8' : static_cast<char>(last + 1);
  cell = Rational(Integer(digits), cell.denominator());
#endif
}

}  // namespace appell::fault
