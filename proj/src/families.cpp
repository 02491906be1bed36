#include "appell/families.hpp"

#include "appell/combinatorics.hpp"
#include "appell/errors.hpp"
#include "appell/stirling.hpp"

#include <map>
#include <mutex>

namespace appell {

namespace {

void require_unit_interval(const Rational& beta) {
  if (beta < Rational(0) || beta > Rational(1)) {
    throw DomainError("beta must lie in [0,1], got " + beta.str());
  }
}

std::vector<std::string_view> split_params(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_param(std::string_view family, std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const RationalParseError& e) {
    throw UsageError("family '" + std::string(family) + "': " + e.what());
  }
}

// Ordinary power series powers of sum_j z^j/(m+j)!, one cache entry per m.
struct CmnkCache {
  std::mutex mutex;
  struct Entry {
    std::size_t length = 0;  // coefficients 0..length-1 are valid in every power
    std::vector<Rational> base;
    std::vector<std::vector<Rational>> powers;
  };
  std::map<unsigned, Entry> entries;
};

CmnkCache& cmnk_cache() {
  static CmnkCache cache;
  return cache;
}

// S(n+k,k)/C(n+k,n) = E S_k^n for uniform Y
Rational uniform_sum_moment(unsigned n, unsigned k) {
  return classical_stirling(n + k, k) / Rational(binomial(n + k, n));
}

}  // namespace

std::string FamilySpec::describe() const {
  switch (kind) {
    case FamilyKind::GenBernoulli: return "gen-bernoulli:" + t.str() + "," + std::to_string(m);
    case FamilyKind::BernoulliOrder: return "bernoulli-order:" + t.str();
    case FamilyKind::ClassicalBernoulli: return "classical-bernoulli";
    case FamilyKind::ApostolEuler: return "apostol-euler:" + t.str() + "," + beta.str();
    case FamilyKind::ClassicalEuler: return "classical-euler";
    case FamilyKind::BStar: return "bstar:" + t.str() + "," + beta.str();
  }
  return "unknown";
}

FamilySpec parse_family(std::string_view selector) {
  const auto colon = selector.find(':');
  const std::string_view name = selector.substr(0, colon);
  std::vector<std::string_view> params;
  if (colon != std::string_view::npos) params = split_params(selector.substr(colon + 1));

  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };

  FamilySpec spec;
  if (name == "classical-bernoulli") {
    expect(0);
    spec.kind = FamilyKind::ClassicalBernoulli;
  } else if (name == "classical-euler") {
    expect(0);
    spec.kind = FamilyKind::ClassicalEuler;
    spec.beta = Rational(1) / Rational(2);
  } else if (name == "bernoulli-order") {
    expect(1);
    spec.kind = FamilyKind::BernoulliOrder;
    spec.t = parse_param(name, params[0]);
  } else if (name == "gen-bernoulli") {
    expect(2);
    spec.kind = FamilyKind::GenBernoulli;
    spec.t = parse_param(name, params[0]);
    const Rational m = parse_param(name, params[1]);
    if (!m.is_integer() || m < Rational(1)) throw DomainError("gen-bernoulli needs integer m >= 1, got " + m.str());
    spec.m = static_cast<unsigned>(m.numerator().get_ui());
  } else if (name == "apostol-euler" || name == "bstar") {
    expect(2);
    spec.kind = name == "bstar" ? FamilyKind::BStar : FamilyKind::ApostolEuler;
    spec.t = parse_param(name, params[0]);
    spec.beta = parse_param(name, params[1]);
    require_unit_interval(spec.beta);
  } else {
    throw UsageError("unknown family '" + std::string(selector) + "'");
  }
  return spec;
}

FamilyLaw family_law(const FamilySpec& spec, std::size_t order) {
  switch (spec.kind) {
    case FamilyKind::GenBernoulli: return {beta_law(spec.m, order), spec.t};
    case FamilyKind::BernoulliOrder: return {beta_law(1, order), spec.t};
    case FamilyKind::ClassicalBernoulli: return {beta_law(1, order), Rational(1)};
    case FamilyKind::ApostolEuler: return {bernoulli_law(spec.beta, order), spec.t};
    case FamilyKind::ClassicalEuler: return {bernoulli_law(Rational(1) / Rational(2), order), Rational(1)};
    case FamilyKind::BStar: return {bernoulli_times_uniform(spec.beta, order), spec.t};
  }
  throw UsageError("unknown family kind");
}

Rational c_mnk(unsigned m, unsigned n, unsigned k) {
  if (m == 0) throw DomainError("C(m,n,k) needs m >= 1");
  auto& cache = cmnk_cache();
  Rational weighted_sum;
  {
    std::lock_guard lock(cache.mutex);
    auto& entry = cache.entries[m];
    if (entry.length <= n) {
      // rebuild every power with the longer truncation
      entry.length = std::max<std::size_t>(n + 1, 2 * entry.length);
      entry.powers.clear();
      entry.base.resize(entry.length);
      for (std::size_t j = 0; j < entry.length; ++j) {
        entry.base[j] = Rational(1) / Rational(factorial(m + static_cast<unsigned>(j)));
      }
      std::vector<Rational> unit(entry.length, Rational(0));
      unit[0] = 1;
      entry.powers.push_back(std::move(unit));
    }
    const std::size_t length = entry.length;
    const auto& base = entry.base;
    while (entry.powers.size() <= k) {
      const auto& prev = entry.powers.back();
      std::vector<Rational> next(length, Rational(0));
      for (std::size_t i = 0; i < length; ++i) {
        if (prev[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < length; ++j) next[i + j] += prev[i] * base[j];
      }
      entry.powers.push_back(std::move(next));
    }
    weighted_sum = entry.powers[k][n];
  }
  Integer mfact_power;
  mpz_pow_ui(mfact_power.get_mpz_t(), factorial(m).get_mpz_t(), k);
  return Rational(factorial(n)) * Rational(mfact_power) * weighted_sum;
}

std::vector<Rational> gen_bernoulli_constants(const Rational& t, unsigned m, std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
      acc += gen_binomial(-t, k) * gen_binomial(Rational(n) + t, n - k) * c_mnk(m, n, k);
    }
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> bernoulli_order_constants(const Rational& t, std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
      acc += gen_binomial(-t, k) * gen_binomial(Rational(n) + t, n - k) * uniform_sum_moment(n, k);
    }
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> apostol_euler_constants(const Rational& t, const Rational& beta, std::size_t order) {
  require_unit_interval(beta);
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned m = 0; m <= n; ++m) {
      acc += gen_binomial(-t, m) * pow(beta, m) * Rational(factorial(m)) * classical_stirling(n, m);
    }
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> bstar_constants(const Rational& t, const Rational& beta, std::size_t order) {
  require_unit_interval(beta);
  std::vector<Rational> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned m = 0; m <= n; ++m) {
      Rational inner = 0;
      for (unsigned k = 0; k <= m; ++k) {
        const Rational term = Rational(binomial(m, k)) * uniform_sum_moment(n, k);
        if ((m - k) % 2 == 0) inner += term; else inner -= term;
      }
      acc += gen_binomial(-t, m) * pow(beta, m) * inner;
    }
    out[n] = acc;
  }
  return out;
}

std::vector<Rational> family_constants(const FamilySpec& spec, std::size_t order) {
  switch (spec.kind) {
    case FamilyKind::GenBernoulli: return gen_bernoulli_constants(spec.t, spec.m, order);
    case FamilyKind::BernoulliOrder: return bernoulli_order_constants(spec.t, order);
    case FamilyKind::ClassicalBernoulli: return bernoulli_order_constants(Rational(1), order);
    case FamilyKind::ApostolEuler: return apostol_euler_constants(spec.t, spec.beta, order);
    case FamilyKind::ClassicalEuler: return apostol_euler_constants(Rational(1), Rational(1) / Rational(2), order);
    case FamilyKind::BStar: return bstar_constants(spec.t, spec.beta, order);
  }
  throw UsageError("unknown family kind");
}

}  // namespace appell
