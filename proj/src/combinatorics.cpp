#include "appell/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace appell {

namespace {

// deque keeps references stable while the table grows
struct FactorialTable {
  std::shared_mutex mutex;
  std::deque<Integer> values{Integer(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

const Integer& factorial(unsigned n) {
  auto& table = factorial_table();
  {
    std::shared_lock lock(table.mutex);
    if (n < table.values.size()) return table.values[n];
  }
  std::unique_lock lock(table.mutex);
  while (table.values.size() <= n) {
    const auto i = static_cast<unsigned long>(table.values.size());
    table.values.push_back(table.values.back() * i);
  }
  return table.values[n];
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational gen_binomial(const Rational& s, unsigned k) {
  Rational numerator = 1;
  for (unsigned i = 0; i < k; ++i) numerator *= s - Rational(i);
  return numerator / Rational(factorial(k));
}

Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n) {
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  }
  Integer out = factorial(n);
  for (unsigned j : parts) out /= factorial(j);
  return out;
}

bool hockey_stick_check(const Rational& s, unsigned p) {
  Rational lhs = 0;
  for (unsigned i = 0; i <= p; ++i) lhs += gen_binomial(s + Rational(i), i);
  return lhs == gen_binomial(s + Rational(1) + Rational(p), p);
}

}  // namespace appell
