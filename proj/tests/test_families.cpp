#include "appell/appell.hpp"
#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/moments.hpp"
#include "appell/stirling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using appell::FamilyKind;
using appell::Rational;
using appell::oracle::frac;

TEST_CASE("c_mnk examples") {
  CHECK(appell::c_mnk(3, 0, 0) == Rational(1));
  CHECK(appell::c_mnk(3, 2, 0) == Rational(0));
  CHECK(appell::c_mnk(2, 3, 1) == frac(1, 10));
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= 10; ++k) {
      CHECK(appell::c_mnk(1, n, k) ==
            Rational(appell::stirling_classical(n + k, k)) / Rational(appell::oracle::ibinom(n + k, n)));
    }
  }
}

TEST_CASE("c_mnk equals the beta(m) sum-moment table") {
  for (unsigned m = 1; m <= 5; ++m) {
    const auto mu = appell::beta_law(m, 20);
    const auto table = appell::sum_moment_table(mu, 20);
    for (unsigned k = 0; k <= 20; ++k) {
      for (unsigned n = 0; n <= 20; ++n) CHECK(appell::c_mnk(m, n, k) == table.at(k, n));
    }
    // small cases against direct enumeration
    for (unsigned k = 0; k <= 5; ++k) {
      for (unsigned n = 0; n <= 5; ++n) CHECK(appell::c_mnk(m, n, k) == appell::oracle::sum_moment_brute(mu.moments(), k, n));
    }
  }
}

TEST_CASE("generalized Bernoulli constants") {
  CHECK(appell::gen_bernoulli_constants(Rational(0), 3, 6) == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0});
  CHECK(appell::gen_bernoulli_constants(Rational(1), 1, 2)[2] == frac(1, 6));
  // t = 2, m = 1: coefficients of ((e^z - 1)/z)^{-2}
  const auto expected = appell::oracle::egf_int_power(appell::uniform01(10).moments(), -2);
  CHECK(appell::gen_bernoulli_constants(Rational(2), 1, 10) == expected);
  CHECK(expected[2] == frac(5, 6));
  for (unsigned m = 1; m <= 4; ++m) {
    for (int t = -2; t <= 3; ++t) {
      CHECK(appell::gen_bernoulli_constants(Rational(t), m, 10) ==
            appell::oracle::egf_int_power(appell::beta_law(m, 10).moments(), -t));
    }
  }
}

TEST_CASE("Bernoulli constants of order t") {
  const auto b = appell::bernoulli_order_constants(Rational(1), 19);
  CHECK(b[4] == frac(-1, 30));
  for (unsigned n = 3; n <= 19; n += 2) CHECK(b[n] == Rational(0));
  CHECK(b == appell::oracle::bernoulli_numbers(19));
  CHECK(appell::bernoulli_order_constants(frac(1, 2), 8) == appell::oracle_constants(appell::uniform01(8), frac(1, 2), 8));
  for (const Rational& t : {Rational(-2), frac(-1, 2), Rational(3)}) {
    CHECK(appell::bernoulli_order_constants(t, 15) == appell::gen_bernoulli_constants(t, 1, 15));
  }
}

TEST_CASE("Apostol-Euler constants") {
  CHECK(appell::apostol_euler_constants(Rational(3), Rational(0), 5) == std::vector<Rational>{1, 0, 0, 0, 0, 0});
  const auto e = appell::apostol_euler_constants(Rational(1), frac(1, 2), 20);
  CHECK(e[1] == frac(-1, 2));
  CHECK(e[2] == Rational(0));
  CHECK(e == appell::oracle::euler_constants(20));
  CHECK_THROWS_AS(appell::apostol_euler_constants(Rational(1), frac(4, 3), 3), appell::DomainError);
  // generating identity: E-constants times (1 + beta(e^z - 1))^t is 1
  for (const Rational& beta : {frac(1, 3), frac(1, 2), Rational(1)}) {
    for (const Rational& t : {Rational(-1), frac(1, 2), Rational(2)}) {
      auto base = (appell::TruncatedEGF::exponential(12) - appell::TruncatedEGF::one(12)) * beta +
                  appell::TruncatedEGF::one(12);
      const appell::TruncatedEGF c(appell::apostol_euler_constants(t, beta, 12));
      CHECK(appell::egf_mul(c, appell::egf_pow(base, t)) == appell::TruncatedEGF::one(12));
    }
  }
}

TEST_CASE("B* constants") {
  for (const Rational& t : {Rational(-1), frac(1, 2), Rational(1), Rational(3)}) {
    CHECK(appell::bstar_constants(t, Rational(1), 15) == appell::bernoulli_order_constants(t, 15));
  }
  CHECK(appell::bstar_constants(Rational(2), Rational(0), 6) == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0});
  // M(z) = (1/2)(e^z - 1)/z + 1/2, reciprocal
  std::vector<Rational> m(11);
  for (unsigned j = 0; j <= 10; ++j) m[j] = j == 0 ? Rational(1) : frac(1, 2) / Rational(j + 1);
  CHECK(appell::bstar_constants(Rational(1), frac(1, 2), 10) == appell::oracle::egf_reciprocal(m));
  CHECK_THROWS_AS(appell::bstar_constants(Rational(1), Rational(-1), 3), appell::DomainError);
}

TEST_CASE("closed forms equal the generic pipeline") {
  for (const Rational& t : {Rational(-2), frac(-1, 2), Rational(1), Rational(3)}) {
    for (unsigned m = 1; m <= 5; ++m) {
      const appell::FamilySpec spec{FamilyKind::GenBernoulli, t, m, Rational(1)};
      const auto law = appell::family_law(spec, 12);
      CHECK(appell::family_constants(spec, 12) == appell::oracle_constants(law.moments, law.t, 12));
    }
    for (const Rational& beta : {Rational(0), frac(1, 3), frac(1, 2), Rational(1)}) {
      for (auto kind : {FamilyKind::ApostolEuler, FamilyKind::BStar}) {
        const appell::FamilySpec spec{kind, t, 1, beta};
        const auto law = appell::family_law(spec, 12);
        CHECK(appell::family_constants(spec, 12) == appell::constants_stirling_form(law.moments, law.t, 12));
      }
    }
  }
}

TEST_CASE("family selectors") {
  auto s = appell::parse_family("gen-bernoulli:-1/2,3");
  CHECK(s.kind == FamilyKind::GenBernoulli);
  CHECK(s.t == frac(-1, 2));
  CHECK(s.m == 3);
  CHECK(s.describe() == "gen-bernoulli:-1/2,3");
  CHECK(appell::parse_family("apostol-euler:2,1/3").describe() == "apostol-euler:2,1/3");
  CHECK(appell::parse_family("classical-euler").kind == FamilyKind::ClassicalEuler);
  CHECK(appell::family_constants(appell::parse_family("classical-euler"), 10) ==
        appell::apostol_euler_constants(Rational(1), frac(1, 2), 10));
  CHECK(appell::family_constants(appell::parse_family("classical-bernoulli"), 10) ==
        appell::gen_bernoulli_constants(Rational(1), 1, 10));
  CHECK_THROWS_AS(appell::parse_family("hermite"), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_family("bernoulli-order"), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_family("bstar:1,0.5"), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_family("bstar:1,2"), appell::DomainError);
  CHECK_THROWS_AS(appell::parse_family("gen-bernoulli:1,0"), appell::DomainError);
}
