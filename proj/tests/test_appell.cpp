#include "appell/appell.hpp"
#include "appell/moments.hpp"
#include "oracles.hpp"

#include <doctest.h>

using appell::ConstantsRoute;
using appell::Polynomial;
using appell::Rational;
using appell::oracle::frac;

namespace {

const ConstantsRoute kRoutes[] = {ConstantsRoute::StirlingForm, ConstantsRoute::MomentForm,
                                  ConstantsRoute::BinomialRoute, ConstantsRoute::SeriesOracle};

std::vector<Rational> zeros_after_one(std::size_t n) {
  std::vector<Rational> v(n + 1, Rational(0));
  v[0] = 1;
  return v;
}

}  // namespace

TEST_CASE("t = 0 gives monomials on every route") {
  const auto mu = appell::beta_law(2, 8);
  for (auto route : kRoutes) {
    CAPTURE(appell::to_string(route));
    CHECK(appell::appell_constants(mu, Rational(0), 8, route) == zeros_after_one(8));
  }
  const auto polys = appell::build_polynomials(zeros_after_one(5));
  for (std::size_t n = 0; n <= 5; ++n) CHECK(polys[n] == Polynomial::monomial(n));
}

TEST_CASE("uniform law at t = 1 gives Bernoulli numbers") {
  const auto expected = appell::oracle::bernoulli_numbers(20);
  CHECK(expected[6] == frac(1, 42));
  const auto mu = appell::uniform01(20);
  for (auto route : kRoutes) {
    CAPTURE(appell::to_string(route));
    CHECK(appell::appell_constants(mu, Rational(1), 20, route) == expected);
  }
  const auto b = appell::constants_stirling_form(mu, Rational(1), 6);
  CHECK(b == std::vector<Rational>{Rational(1), frac(-1, 2), frac(1, 6), Rational(0), frac(-1, 30), Rational(0), frac(1, 42)});
}

TEST_CASE("Bernoulli(1/2) law at t = 1 gives Euler constants") {
  const auto expected = appell::oracle::euler_constants(16);
  const auto mu = appell::bernoulli_law(frac(1, 2), 16);
  const auto c = appell::constants_stirling_form(mu, Rational(1), 16);
  CHECK(c == expected);
  CHECK(c[1] == frac(-1, 2));
  CHECK(c[2] == Rational(0));
}

TEST_CASE("point mass with t = -1 gives e^z, t = 1 gives e^{-z}") {
  const auto mu = appell::point_mass_one(10);
  const auto up = appell::oracle_constants(mu, Rational(-1), 10);
  for (const auto& v : up) CHECK(v == Rational(1));
  const auto down = appell::constants_moment_form(mu, Rational(1), 10);
  CHECK(down[1] == Rational(-1));
  for (unsigned n = 0; n <= 10; ++n) CHECK(down[n] == Rational(n % 2 ? -1 : 1));
}

TEST_CASE("integer orders match repeated series products") {
  const std::vector<appell::MomentSequence> laws = {appell::uniform01(12), appell::beta_law(3, 12),
                                                    appell::bernoulli_law(frac(1, 3), 12),
                                                    appell::bernoulli_times_uniform(frac(1, 2), 12)};
  for (const auto& mu : laws) {
    for (int t = -2; t <= 3; ++t) {
      CAPTURE(mu.tag().describe());
      CAPTURE(t);
      const auto expected = appell::oracle::egf_int_power(mu.moments(), -t);
      for (auto route : kRoutes) CHECK(appell::appell_constants(mu, Rational(t), 12, route) == expected);
    }
  }
}

TEST_CASE("four routes agree for fractional orders") {
  const std::vector<appell::MomentSequence> laws = {appell::point_mass_one(14), appell::uniform01(14),
                                                    appell::beta_law(4, 14), appell::bernoulli_law(Rational(0), 14),
                                                    appell::bernoulli_times_uniform(frac(1, 3), 14)};
  for (const auto& mu : laws) {
    for (const Rational& t : {frac(-1, 2), frac(1, 2), frac(5, 3), frac(-7, 4)}) {
      CAPTURE(mu.tag().describe());
      CAPTURE(t.str());
      const auto oracle = appell::oracle_constants(mu, t, 14);
      CHECK(appell::constants_stirling_form(mu, t, 14) == oracle);
      CHECK(appell::constants_moment_form(mu, t, 14) == oracle);
      CHECK(appell::constants_binomial_route(mu, t, 14) == oracle);
    }
  }
  // the half-order Bernoulli sequence squares to the ordinary one
  const auto half = appell::TruncatedEGF(appell::constants_stirling_form(appell::uniform01(12), frac(1, 2), 12));
  CHECK(appell::egf_mul(half, half).coeffs() == appell::oracle::bernoulli_numbers(12));
}

TEST_CASE("build_polynomials reproduces textbook polynomials") {
  const auto b = appell::build_polynomials(appell::oracle::bernoulli_numbers(4));
  CHECK(b[2] == Polynomial({frac(1, 6), Rational(-1), Rational(1)}));
  CHECK(b[2].str() == "x^2 - x + 1/6");
  CHECK(appell::evaluate(b[2], Rational(1)) == frac(1, 6));
  CHECK(b[3].str() == "x^3 - 3/2*x^2 + 1/2*x");
  const auto e = appell::build_polynomials(appell::oracle::euler_constants(3));
  CHECK(e[1].str() == "x - 1/2");
}

TEST_CASE("Appell axioms hold") {
  const auto seq = appell::make_appell_sequence(appell::beta_law(2, 20), frac(-1, 2), 20);
  CHECK(seq.constants[0] == Rational(1));
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(seq.polynomials[n].degree() == n);
    CHECK(seq.polynomials[n].leading() == Rational(1));
    if (n > 0) CHECK(seq.polynomials[n].derivative() == Rational(static_cast<unsigned long>(n)) * seq.polynomials[n - 1]);
  }
  const auto generated = appell::polynomials_from_generating_function(
      appell::TruncatedEGF(std::vector<Rational>(seq.constants.begin(), seq.constants.begin() + 13)));
  for (std::size_t n = 0; n <= 12; ++n) CHECK(generated[n] == seq.polynomials[n]);
}

TEST_CASE("order additivity") {
  const auto mu = appell::bernoulli_times_uniform(frac(1, 3), 15);
  for (const auto& [t1, t2] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(2)}, {frac(1, 2), frac(-3, 2)}, {frac(2, 3), frac(1, 3)}}) {
    const appell::TruncatedEGF a(appell::constants_stirling_form(mu, t1, 15));
    const appell::TruncatedEGF b(appell::constants_stirling_form(mu, t2, 15));
    CHECK(appell::egf_mul(a, b).coeffs() == appell::constants_stirling_form(mu, t1 + t2, 15));
  }
}

TEST_CASE("polynomial evaluation in double precision") {
  const auto b = appell::build_polynomials(appell::oracle::bernoulli_numbers(6));
  for (const auto& [x, text] : std::vector<std::pair<double, const char*>>{
           {-1.5, "-3/2"}, {0.0, "0"}, {0.25, "1/4"}, {0.5, "1/2"}, {2.0, "2"}}) {
    CHECK(appell::evaluate_float(b[6], x) == doctest::Approx(appell::evaluate(b[6], Rational::parse(text)).to_double()));
  }
}
