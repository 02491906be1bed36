#include "appell/diffops.hpp"

#include "appell/combinatorics.hpp"
#include "appell/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace appell {

Polynomial delta(const Polynomial& p, const Rational& step) { return p.shifted(step) - p; }

Rational delta_steps(const Polynomial& p, std::span<const Rational> steps, const Rational& x) {
  Polynomial q = p;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (q.is_zero()) break;
    q = delta(q, *it);
  }
  return q(x);
}

Rational delta_steps_subsets(const Polynomial& p, std::span<const Rational> steps, const Rational& x) {
  const std::size_t m = steps.size();
  if (m >= 63) throw std::invalid_argument("subset form limited to fewer than 63 steps");
  Rational acc = 0;
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    Rational point = x;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ULL << i)) {
        point += steps[i];
        ++size;
      }
    }
    const Rational value = p(point);
    if ((m - size) % 2 == 0) acc += value; else acc -= value;
  }
  return acc;
}

Rational delta_derivative_form(const Polynomial& p, std::span<const Rational> steps, const Rational& x) {
  const std::size_t m = steps.size();
  Polynomial q = p;
  for (std::size_t i = 0; i < m; ++i) q = q.derivative();
  if (q.is_zero()) return 0;

  // Moments of W = sum a_i U_i as an EGF: product of E e^{z a U} = sum a^j/(j+1) z^j/j!.
  const std::size_t order = q.degree();
  TruncatedEGF w = TruncatedEGF::one(order);
  Rational scale = 1;
  for (const Rational& a : steps) {
    TruncatedEGF factor(order);
    Rational power = 1;
    for (std::size_t j = 0; j <= order; ++j) {
      factor[j] = power / Rational(static_cast<unsigned long>(j + 1));
      power *= a;
    }
    w = egf_mul(w, factor);
    scale *= a;
  }

  // E q(x + W) = sum_j q_j sum_i C(j,i) x^{j-i} E W^i
  Rational acc = 0;
  for (std::size_t j = 0; j <= order; ++j) {
    const Rational& c = q.coeffs()[j];
    if (c.is_zero()) continue;
    Rational inner = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      inner += Rational(binomial(j, i)) * pow(x, static_cast<unsigned>(j - i)) * w[i];
    }
    acc += c * inner;
  }
  return scale * acc;
}

Rational expected_delta_monomial(const MomentSequence& mu, unsigned n, unsigned m) {
  const std::size_t order = std::max(n, m);
  const SumMomentTable sums = sum_moment_table(mu, order);
  Rational acc = 0;
  for (unsigned k = 0; k <= m; ++k) {
    const Rational term = Rational(binomial(m, k)) * sums.at(k, n);
    if ((m - k) % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

}  // namespace appell
