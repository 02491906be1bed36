#include "appell/stirling.hpp"

#include "appell/combinatorics.hpp"
#include "appell/fault.hpp"
#include "appell/series.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace appell {

namespace {

void require_m_le_n(unsigned n, unsigned m) {
  if (m > n) {
    throw std::invalid_argument("S(n,m) needs m <= n, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
}

Rational signed_binomial(unsigned m, unsigned k) {
  Rational c(binomial(m, k));
  return (m - k) % 2 == 0 ? c : -c;
}

struct ClassicalCache {
  std::shared_mutex mutex;
  std::deque<std::vector<Rational>> rows{{Rational(1)}};
};

ClassicalCache& classical_cache() {
  static ClassicalCache cache;
  return cache;
}

const Rational& zero_value() {
  static const Rational zero = 0;
  return zero;
}

// Sum over compositions (a_1..a_parts) of `remaining` of prod mu_{a+1}/((a+1) a!).
// The (n-m)! factor is applied by the caller, turning prod 1/a! into the multinomial.
void lemma2_compositions(const MomentSequence& mu, unsigned remaining, unsigned parts, const Rational& partial,
                         Rational& acc) {
  if (parts == 0) {
    if (remaining == 0) acc += partial;
    return;
  }
  if (parts == 1) {
    const unsigned a = remaining;
    acc += partial * mu.moment(a + 1) / (Rational(a + 1) * Rational(factorial(a)));
    return;
  }
  for (unsigned a = 0; a <= remaining; ++a) {
    const Rational& moment = mu.moment(a + 1);
    if (moment.is_zero()) continue;
    lemma2_compositions(mu, remaining - a, parts - 1,
                        partial * moment / (Rational(a + 1) * Rational(factorial(a))), acc);
  }
}

}  // namespace

const char* to_string(StirlingRoute route) {
  switch (route) {
    case StirlingRoute::DefinitionSum: return "definition-sum";
    case StirlingRoute::GeneratingFunction: return "generating-function";
    case StirlingRoute::Lemma2Expansion: return "lemma2-expansion";
    case StirlingRoute::Recurrence: return "recurrence";
  }
  return "unknown";
}

StirlingTable::StirlingTable(std::vector<std::vector<Rational>> rows, StirlingRoute source)
    : rows_(std::move(rows)), source_(source) {
  if (rows_.empty()) throw std::invalid_argument("Stirling table needs row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw std::invalid_argument("Stirling table row " + std::to_string(n) + " is not triangular");
  }
}

const Rational& StirlingTable::at(std::size_t n, std::size_t m) const {
  if (m > n) throw std::out_of_range("Stirling table has no entry with m > n");
  return rows_.at(n).at(m);
}

Integer stirling_classical(unsigned n, unsigned m) {
  require_m_le_n(n, m);
  Integer acc = 0;
  for (unsigned k = 0; k <= m; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n);
    Integer term = binomial(m, k) * power;
    if ((m - k) % 2 == 0) acc += term; else acc -= term;
  }
  return acc / factorial(m);
}

const Rational& classical_stirling(unsigned n, unsigned m) {
  if (m > n) return zero_value();
  auto& cache = classical_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (n < cache.rows.size()) return cache.rows[n][m];
  }
  std::unique_lock lock(cache.mutex);
  while (cache.rows.size() <= n) {
    const auto& prev = cache.rows.back();
    const std::size_t row = cache.rows.size();
    std::vector<Rational> next(row + 1, Rational(0));
    for (std::size_t j = 1; j <= row; ++j) {
      const Rational same = j < prev.size() ? Rational(static_cast<unsigned long>(j)) * prev[j] : Rational(0);
      next[j] = same + prev[j - 1];
    }
    cache.rows.push_back(std::move(next));
  }
  return cache.rows[n][m];
}

StirlingTable classical_stirling_table(std::size_t order) {
  classical_stirling(static_cast<unsigned>(order), 0);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(order + 1);
  {
    auto& cache = classical_cache();
    std::shared_lock lock(cache.mutex);
    for (std::size_t n = 0; n <= order; ++n) rows.push_back(cache.rows[n]);
  }
  fault::maybe_corrupt(fault::kClassicalStirling, rows);
  return StirlingTable(std::move(rows), StirlingRoute::Recurrence);
}

StirlingTable classical_stirling_defsum_table(std::size_t order) {
  std::vector<std::vector<Rational>> rows(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    for (unsigned m = 0; m <= n; ++m) rows[n].emplace_back(stirling_classical(n, m));
  }
  return StirlingTable(std::move(rows), StirlingRoute::DefinitionSum);
}

Rational stirling_prob_defsum(const SumMomentTable& sums, unsigned n, unsigned m) {
  require_m_le_n(n, m);
  Rational acc = 0;
  for (unsigned k = 0; k <= m; ++k) acc += signed_binomial(m, k) * sums.at(k, n);
  return acc / Rational(factorial(m));
}

Rational stirling_prob_defsum(const MomentSequence& mu, unsigned n, unsigned m) {
  require_m_le_n(n, m);
  return stirling_prob_defsum(sum_moment_table(mu, n), n, m);
}

Rational stirling_prob_gf(const MomentSequence& mu, unsigned n, unsigned m, std::size_t order) {
  require_m_le_n(n, m);
  if (n > order) {
    throw std::invalid_argument("coefficient n = " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(order));
  }
  const TruncatedEGF shifted = egf_from_moments(mu, order) - TruncatedEGF::one(order);
  TruncatedEGF power = TruncatedEGF::one(order);
  for (unsigned i = 0; i < m; ++i) power = egf_mul(power, shifted);
  return power[n] / Rational(factorial(m));
}

Rational stirling_prob_lemma2(const MomentSequence& mu, unsigned n, unsigned m) {
  require_m_le_n(n, m);
  if (mu.order() < n) throw std::invalid_argument("moment list too short for S_Y(n,m), n = " + std::to_string(n));
  Rational sum = 0;
  lemma2_compositions(mu, n - m, m, Rational(1), sum);
  return Rational(binomial(n, m)) * Rational(factorial(n - m)) * sum;
}

StirlingTable stirling_prob_table(const MomentSequence& mu, std::size_t order, StirlingRoute route) {
  std::vector<std::vector<Rational>> rows(order + 1);
  switch (route) {
    case StirlingRoute::DefinitionSum: {
      const SumMomentTable sums = sum_moment_table(mu, order);
      for (unsigned n = 0; n <= order; ++n) {
        for (unsigned m = 0; m <= n; ++m) rows[n].push_back(stirling_prob_defsum(sums, n, m));
      }
      fault::maybe_corrupt(fault::kStirling, rows);
      break;
    }
    case StirlingRoute::GeneratingFunction: {
      const TruncatedEGF shifted = egf_from_moments(mu, order) - TruncatedEGF::one(order);
      for (unsigned n = 0; n <= order; ++n) rows[n].resize(n + 1);
      TruncatedEGF power = TruncatedEGF::one(order);
      for (unsigned m = 0; m <= order; ++m) {
        if (m > 0) power = egf_mul(power, shifted);
        const Rational scale = Rational(1) / Rational(factorial(m));
        for (unsigned n = m; n <= order; ++n) rows[n][m] = power[n] * scale;
      }
      break;
    }
    case StirlingRoute::Lemma2Expansion:
      for (unsigned n = 0; n <= order; ++n) {
        for (unsigned m = 0; m <= n; ++m) rows[n].push_back(stirling_prob_lemma2(mu, n, m));
      }
      break;
    case StirlingRoute::Recurrence:
      throw std::invalid_argument("the recurrence route exists only for classical Stirling numbers");
  }
  return StirlingTable(std::move(rows), route);
}

}  // namespace appell
