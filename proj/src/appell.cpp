#include "appell/appell.hpp"

#include "appell/combinatorics.hpp"
#include "appell/stirling.hpp"

namespace appell {

const char* to_string(ConstantsRoute route) {
  switch (route) {
    case ConstantsRoute::StirlingForm: return "stirling-form";
    case ConstantsRoute::MomentForm: return "moment-form";
    case ConstantsRoute::BinomialRoute: return "binomial-route";
    case ConstantsRoute::SeriesOracle: return "series-oracle";
  }
  return "unknown";
}

std::vector<Rational> constants_stirling_form(const MomentSequence& mu, const Rational& t, std::size_t order) {
  const StirlingTable table = stirling_prob_table(mu, order);
  std::vector<Rational> weights(order + 1);  // C(-t,m) m!
  for (unsigned m = 0; m <= order; ++m) weights[m] = gen_binomial(-t, m) * Rational(factorial(m));

  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned m = 0; m <= n; ++m) acc += weights[m] * table.at(n, m);
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> constants_moment_form(const MomentSequence& mu, const Rational& t, std::size_t order) {
  const SumMomentTable sums = sum_moment_table(mu, order);
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    const Rational upper = Rational(n) + t;
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
      if (sums.at(k, n).is_zero()) continue;
      acc += gen_binomial(-t, k) * gen_binomial(upper, n - k) * sums.at(k, n);
    }
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> constants_binomial_route(const MomentSequence& mu, const Rational& t, std::size_t order) {
  const TruncatedEGF shifted = egf_from_moments(mu, order) - TruncatedEGF::one(order);
  TruncatedEGF total = TruncatedEGF::zero(order);
  TruncatedEGF power = TruncatedEGF::one(order);
  // (M-1)^m has no terms below z^m, so m <= N suffices
  for (unsigned m = 0; m <= order; ++m) {
    if (m > 0) power = egf_mul(power, shifted);
    total += gen_binomial(-t, m) * power;
  }
  return total.coeffs();
}

std::vector<Rational> oracle_constants(const MomentSequence& mu, const Rational& t, std::size_t order) {
  return egf_pow(egf_from_moments(mu, order), -t).coeffs();
}

std::vector<Rational> appell_constants(const MomentSequence& mu, const Rational& t, std::size_t order,
                                       ConstantsRoute route) {
  switch (route) {
    case ConstantsRoute::StirlingForm: return constants_stirling_form(mu, t, order);
    case ConstantsRoute::MomentForm: return constants_moment_form(mu, t, order);
    case ConstantsRoute::BinomialRoute: return constants_binomial_route(mu, t, order);
    case ConstantsRoute::SeriesOracle: return oracle_constants(mu, t, order);
  }
  return {};
}

std::vector<Polynomial> build_polynomials(const std::vector<Rational>& constants) {
  std::vector<Polynomial> out;
  out.reserve(constants.size());
  for (std::size_t n = 0; n < constants.size(); ++n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * constants[k];
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<Polynomial> polynomials_from_generating_function(const TruncatedEGF& constants) {
  const std::size_t order = constants.order();
  std::vector<Polynomial> exp_xz;  // e^{xz} has z^n/n! coefficient x^n
  exp_xz.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) exp_xz.push_back(Polynomial::monomial(n));

  std::vector<Polynomial> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Polynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += (Rational(binomial(n, k)) * constants[k]) * exp_xz[n - k];
    }
    out[n] = std::move(acc);
  }
  return out;
}

AppellSequence make_appell_sequence(const MomentSequence& mu, const Rational& t, std::size_t order,
                                    ConstantsRoute route) {
  auto constants = appell_constants(mu, t, order, route);
  auto polynomials = build_polynomials(constants);
  return AppellSequence{t, mu, std::move(constants), std::move(polynomials)};
}

}  // namespace appell
