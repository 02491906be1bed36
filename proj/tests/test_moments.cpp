#include "appell/errors.hpp"
#include "appell/moments.hpp"
#include "appell/stirling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

using appell::Rational;
using appell::oracle::frac;

TEST_CASE("named moment closed forms") {
  CHECK(appell::beta_law(1, 4).moment(2) == frac(1, 3));
  CHECK(appell::beta_law(3, 4).moment(2) == frac(1, 10));
  CHECK(appell::bernoulli_law(frac(1, 2), 6).moment(5) == frac(1, 2));
  const auto product = appell::bernoulli_times_uniform(frac(1, 3), 6);
  for (unsigned j = 1; j <= 6; ++j) CHECK(product.moment(j) == frac(1, 3) / Rational(j + 1));
  // beta(m) moments equal m * Beta(j+1, m) = j! m! / (m+j)!
  for (unsigned m = 1; m <= 5; ++m) {
    const auto mu = appell::beta_law(m, 10);
    for (unsigned j = 0; j <= 10; ++j) {
      CHECK(mu.moment(j) == Rational(appell::Integer(appell::oracle::ifact(j) * appell::oracle::ifact(m))) /
                                Rational(appell::oracle::ifact(m + j)));
    }
  }
  CHECK(appell::uniform01(5).moments() == appell::beta_law(1, 5).moments());
  for (const auto& mu : {appell::point_mass_one(3), appell::uniform01(3), appell::bernoulli_law(Rational(0), 3)}) {
    CHECK(mu.moment(0) == Rational(1));
    CHECK(mu.order() == 3);
  }
}

TEST_CASE("bernoulli parameter outside [0,1] is a domain error") {
  CHECK_THROWS_AS(appell::bernoulli_law(frac(3, 2), 4), appell::DomainError);
  CHECK_THROWS_AS(appell::bernoulli_times_uniform(Rational(-1), 4), appell::DomainError);
  CHECK_THROWS_AS(appell::beta_law(0, 4), appell::DomainError);
  CHECK_NOTHROW(appell::bernoulli_law(Rational(0), 4));
  CHECK_NOTHROW(appell::bernoulli_law(Rational(1), 4));
}

TEST_CASE("parse_distribution descriptors") {
  CHECK(appell::parse_distribution("beta:3", 4).tag().describe() == "beta:3");
  CHECK(appell::parse_distribution("bernoulli:2/4", 4).tag().describe() == "bernoulli:1/2");
  CHECK(appell::parse_distribution("uniform01", 4).moments() == appell::uniform01(4).moments());
  CHECK_THROWS_AS(appell::parse_distribution("bernoulli:0.5", 4), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_distribution("gamma:2", 4), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_distribution("beta", 4), appell::UsageError);
  CHECK_THROWS_AS(appell::parse_distribution("bernoulli:2", 4), appell::DomainError);
  CHECK_THROWS_AS(appell::parse_distribution("custom:/nonexistent/file.json", 4), appell::InputError);
}

TEST_CASE("custom moment documents") {
  const auto mu = appell::load_custom_moments(R"({"moments": ["1","1/2","1/3","1/4"]})");
  CHECK(mu.order() == 3);
  CHECK(mu.moments() == appell::beta_law(1, 3).moments());
  CHECK(mu.tag().kind == appell::DistributionKind::Custom);

  const auto trimmed = appell::load_custom_moments(R"({"moments": ["1","1/2","1/3","1/4"]})", 2);
  CHECK(trimmed.order() == 2);

  auto message = [](const std::string& doc, std::optional<std::size_t> n) {
    try {
      appell::load_custom_moments(doc, n);
    } catch (const appell::InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const auto short_msg = message(R"({"moments": ["1","1"]})", 5);
  const auto mu0_msg = message(R"({"moments": ["2","1"]})", std::nullopt);
  const auto bad_msg = message(R"({"moments": ["1","x/2"]})", std::nullopt);
  const auto decimal_msg = message(R"({"moments": ["1","0.5"]})", std::nullopt);
  const auto number_msg = message(R"({"moments": [1, "1/2"]})", std::nullopt);
  const auto json_msg = message(R"({"moments": ["1",)", std::nullopt);
  CHECK(short_msg.find("too short") != std::string::npos);
  CHECK(mu0_msg.find("mu_0 must be 1") != std::string::npos);
  CHECK(bad_msg.find("moment 1") != std::string::npos);
  CHECK(decimal_msg.find("moment 1") != std::string::npos);
  CHECK(number_msg.find("not a \"p/q\" string") != std::string::npos);
  CHECK(json_msg.find("not valid JSON") != std::string::npos);
  // each failure reads differently
  const std::set<std::string> distinct = {short_msg, mu0_msg, bad_msg, number_msg, json_msg};
  CHECK(distinct.size() == 5);
}

TEST_CASE("custom moment file round trip") {
  const std::string path = "custom_moments_test.json";
  {
    std::ofstream out(path);
    out << R"({"moments": ["1", "1/3", "1/6", "1/10", "1/15"]})";
  }
  const auto mu = appell::parse_distribution("custom:" + path, 4);
  CHECK(mu.moments() == appell::beta_law(2, 4).moments());
  CHECK(mu.tag().describe() == "custom:" + path);
  std::remove(path.c_str());
}

TEST_CASE("sum-moment table examples") {
  const auto u = appell::uniform01(6);
  const auto table = appell::sum_moment_table(u, 6);
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(table.at(0, n) == Rational(n == 0 ? 1 : 0));
    CHECK(table.at(1, n) == u.moment(n));
  }
  // E(U1 + U2)^2 = 2/3 + 2 * 1/4
  CHECK(table.at(2, 2) == frac(7, 6));
  CHECK(appell::oracle::sum_moment_brute(u.moments(), 2, 2) == frac(7, 6));
}

TEST_CASE("convolution recurrence equals multinomial enumeration") {
  const std::vector<appell::MomentSequence> laws = {
      appell::point_mass_one(8), appell::beta_law(1, 8), appell::beta_law(4, 8), appell::bernoulli_law(frac(1, 3), 8),
      appell::bernoulli_times_uniform(frac(1, 2), 8)};
  for (const auto& mu : laws) {
    const auto table = appell::sum_moment_table(mu, 8);
    for (unsigned k = 0; k <= 8; ++k) {
      for (unsigned n = 0; n <= 8; ++n) {
        CAPTURE(mu.tag().describe());
        CAPTURE(k);
        CAPTURE(n);
        const Rational brute = appell::oracle::sum_moment_brute(mu.moments(), k, n);
        CHECK(table.at(k, n) == brute);
        CHECK(appell::sum_moment_enumerated(mu, k, n) == brute);
      }
    }
  }
}

TEST_CASE("point mass one gives k^n") {
  const auto table = appell::sum_moment_table(appell::point_mass_one(12), 12);
  for (unsigned k = 0; k <= 12; ++k) {
    for (unsigned n = 0; n <= 12; ++n) CHECK(table.at(k, n) == appell::pow(Rational(k), n));
  }
}

TEST_CASE("uniform sums match S(n+k,k)/C(n+k,n)") {
  const auto table = appell::sum_moment_table(appell::uniform01(15), 15);
  for (unsigned k = 0; k <= 15; ++k) {
    for (unsigned n = 0; n <= 15; ++n) {
      CHECK(table.at(k, n) ==
            Rational(appell::stirling_classical(n + k, k)) / Rational(appell::oracle::ibinom(n + k, n)));
    }
  }
}
