#pragma once

#include "appell/moments.hpp"
#include "appell/polynomial.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"

#include <vector>

namespace appell {

// Throughout, "order t" is the exponent in G(A(t;x), z) = e^{xz} / (E e^{zY})^t,
// i.e. the series (E e^{zY}) is raised to the power -t. t = 1 is the
// reciprocal-of-MGF class.

enum class ConstantsRoute { StirlingForm, MomentForm, BinomialRoute, SeriesOracle };

const char* to_string(ConstantsRoute route);

/// A_n(t;0) = sum_m C(-t,m) m! S_Y(n,m), n = 0..N. Production route.
std::vector<Rational> constants_stirling_form(const MomentSequence& mu, const Rational& t, std::size_t order);

/// A_n(t;0) = sum_k C(-t,k) C(n+t,n-k) E S_k^n.
std::vector<Rational> constants_moment_form(const MomentSequence& mu, const Rational& t, std::size_t order);

/// Coefficients of sum_m C(-t,m) (M(z) - 1)^m, the binomial expansion of M^{-t}.
std::vector<Rational> constants_binomial_route(const MomentSequence& mu, const Rational& t, std::size_t order);

/// Coefficients of egf_pow(M, -t) computed through exp/log; the reference values.
std::vector<Rational> oracle_constants(const MomentSequence& mu, const Rational& t, std::size_t order);

std::vector<Rational> appell_constants(const MomentSequence& mu, const Rational& t, std::size_t order,
                                       ConstantsRoute route);

/// A_n(x) = sum_k C(n,k) A_k(0) x^{n-k} for n = 0..N, N = constants.size() - 1.
std::vector<Polynomial> build_polynomials(const std::vector<Rational>& constants);

/// A_n(x) read as the z^n/n! coefficient of G(A(0), z) e^{xz}, convolving
/// polynomial-valued coefficients. Independent of build_polynomials.
std::vector<Polynomial> polynomials_from_generating_function(const TruncatedEGF& constants);

struct AppellSequence {
  Rational order;
  MomentSequence source;
  std::vector<Rational> constants;
  std::vector<Polynomial> polynomials;

  std::size_t size() const { return constants.size(); }
};

AppellSequence make_appell_sequence(const MomentSequence& mu, const Rational& t, std::size_t order,
                                    ConstantsRoute route = ConstantsRoute::StirlingForm);

}  // namespace appell
