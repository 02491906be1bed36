#include "appell/moments.hpp"

#include "appell/combinatorics.hpp"
#include "appell/errors.hpp"
#include "appell/fault.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace appell {

namespace {

void require_unit_interval(const Rational& beta) {
  if (beta < Rational(0) || beta > Rational(1)) {
    throw DomainError("beta must lie in [0,1], got " + beta.str());
  }
}

Rational parse_beta(std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const RationalParseError& e) {
    throw UsageError(std::string("beta parameter: ") + e.what());
  }
}

// Sum over compositions of `remaining` into exactly `parts` ordered naturals of
// prod mu_j / j!. The caller multiplies by n! to obtain the multinomial weights.
void enumerate_parts(const MomentSequence& mu, unsigned remaining, unsigned parts, const Rational& partial,
                     Rational& acc) {
  if (parts == 0) {
    if (remaining == 0) acc += partial;
    return;
  }
  if (parts == 1) {
    acc += partial * mu.moment(remaining) / Rational(factorial(remaining));
    return;
  }
  for (unsigned j = 0; j <= remaining; ++j) {
    if (mu.moment(j).is_zero()) continue;
    enumerate_parts(mu, remaining - j, parts - 1, partial * mu.moment(j) / Rational(factorial(j)), acc);
  }
}

}  // namespace

std::string DistributionTag::describe() const {
  switch (kind) {
    case DistributionKind::PointMassOne: return "point-mass-one";
    case DistributionKind::Uniform01: return "uniform01";
    case DistributionKind::Beta: return "beta:" + std::to_string(m);
    case DistributionKind::Bernoulli: return "bernoulli:" + beta.str();
    case DistributionKind::BernoulliTimesUniform: return "bernoulli-times-uniform:" + beta.str();
    case DistributionKind::Custom: return "custom:" + source;
  }
  return "custom";
}

MomentSequence::MomentSequence(std::vector<Rational> moments, DistributionTag tag)
    : moments_(std::move(moments)), tag_(std::move(tag)) {
  if (moments_.empty()) throw InputError("moment list is empty");
  if (moments_[0] != Rational(1)) throw InputError("mu_0 must be 1, got " + moments_[0].str());
}

MomentSequence MomentSequence::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw InputError("moment list too short: need " + std::to_string(order + 1) + " entries, have " +
                     std::to_string(moments_.size()));
  }
  return MomentSequence(std::vector<Rational>(moments_.begin(), moments_.begin() + order + 1), tag_);
}

MomentSequence make_named(const DistributionTag& tag, std::size_t order) {
  if (tag.kind == DistributionKind::Custom) {
    throw UsageError("custom moments have no closed form; load them from a document");
  }
  if (tag.kind == DistributionKind::Beta && tag.m == 0) throw DomainError("beta law needs m >= 1");
  if (tag.kind == DistributionKind::Bernoulli || tag.kind == DistributionKind::BernoulliTimesUniform) {
    require_unit_interval(tag.beta);
  }
  std::vector<Rational> mu(order + 1);
  mu[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) {
    switch (tag.kind) {
      case DistributionKind::PointMassOne:
        mu[j] = 1;
        break;
      case DistributionKind::Uniform01:
        mu[j] = Rational(Integer(1), Integer(j + 1));
        break;
      case DistributionKind::Beta:
        mu[j] = Rational(Integer(1), binomial(tag.m + j, tag.m));
        break;
      case DistributionKind::Bernoulli:
        mu[j] = tag.beta;
        break;
      case DistributionKind::BernoulliTimesUniform:
        mu[j] = tag.beta / Rational(j + 1);
        break;
      case DistributionKind::Custom:
        break;
    }
  }
  return MomentSequence(std::move(mu), tag);
}

MomentSequence point_mass_one(std::size_t order) {
  return make_named(DistributionTag{DistributionKind::PointMassOne, 1, 0, {}}, order);
}

MomentSequence uniform01(std::size_t order) {
  return make_named(DistributionTag{DistributionKind::Uniform01, 1, 0, {}}, order);
}

MomentSequence beta_law(unsigned m, std::size_t order) {
  return make_named(DistributionTag{DistributionKind::Beta, m, 0, {}}, order);
}

MomentSequence bernoulli_law(const Rational& beta, std::size_t order) {
  return make_named(DistributionTag{DistributionKind::Bernoulli, 1, beta, {}}, order);
}

MomentSequence bernoulli_times_uniform(const Rational& beta, std::size_t order) {
  return make_named(DistributionTag{DistributionKind::BernoulliTimesUniform, 1, beta, {}}, order);
}

MomentSequence load_custom_moments(std::string_view json_text, std::optional<std::size_t> order,
                                   std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("moment document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("moments")) {
    throw InputError("moment document must be an object with a \"moments\" array");
  }
  const auto& list = doc.at("moments");
  if (!list.is_array()) throw InputError("\"moments\" must be an array of \"p/q\" strings");
  if (list.empty()) throw InputError("moment list is empty");

  std::vector<Rational> mu;
  mu.reserve(list.size());
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (!list[j].is_string()) {
      throw InputError("moment " + std::to_string(j) + " is not a \"p/q\" string");
    }
    try {
      mu.push_back(Rational::parse(list[j].get<std::string>()));
    } catch (const RationalParseError& e) {
      throw InputError("moment " + std::to_string(j) + ": " + e.what());
    }
  }
  if (mu[0] != Rational(1)) throw InputError("mu_0 must be 1, got " + mu[0].str());
  if (order && mu.size() < *order + 1) {
    throw InputError("moment list too short: need " + std::to_string(*order + 1) + " entries for N = " +
                     std::to_string(*order) + ", have " + std::to_string(mu.size()));
  }
  if (order) mu.resize(*order + 1);

  DistributionTag tag;
  tag.kind = DistributionKind::Custom;
  tag.source = std::move(source);
  return MomentSequence(std::move(mu), std::move(tag));
}

MomentSequence load_custom_moments_file(const std::string& path, std::optional<std::size_t> order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read moment file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_custom_moments(buffer.str(), order, path);
}

MomentSequence parse_distribution(std::string_view descriptor, std::size_t order) {
  const auto colon = descriptor.find(':');
  const std::string_view name = descriptor.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view() : descriptor.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  auto no_arg = [&] {
    if (has_arg) throw UsageError("distribution '" + std::string(name) + "' takes no parameter");
  };
  auto need_arg = [&] {
    if (!has_arg || arg.empty()) throw UsageError("distribution '" + std::string(name) + "' needs a parameter");
  };

  if (name == "point-mass-one") {
    no_arg();
    return point_mass_one(order);
  }
  if (name == "uniform01" || name == "uniform") {
    no_arg();
    return uniform01(order);
  }
  if (name == "beta") {
    need_arg();
    const Rational m = parse_beta(arg);
    if (!m.is_integer() || m < Rational(1)) throw DomainError("beta law needs integer m >= 1, got " + m.str());
    return beta_law(static_cast<unsigned>(m.numerator().get_ui()), order);
  }
  if (name == "bernoulli") {
    need_arg();
    return bernoulli_law(parse_beta(arg), order);
  }
  if (name == "bernoulli-times-uniform") {
    need_arg();
    return bernoulli_times_uniform(parse_beta(arg), order);
  }
  if (name == "custom") {
    need_arg();
    return load_custom_moments_file(std::string(arg), order);
  }
  throw UsageError("unknown distribution '" + std::string(descriptor) + "'");
}

SumMomentTable sum_moment_table(const MomentSequence& mu, std::size_t order) {
  if (mu.order() < order) {
    throw InputError("moment list too short for sum-moment table of order " + std::to_string(order));
  }
  std::vector<std::vector<Rational>> values(order + 1, std::vector<Rational>(order + 1, Rational(0)));
  values[0][0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t n = 0; n <= order; ++n) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        const Rational& prev = values[k - 1][n - j];
        if (prev.is_zero() || mu.moment(j).is_zero()) continue;
        acc += Rational(binomial(n, j)) * mu.moment(j) * prev;
      }
      values[k][n] = acc;
    }
  }
  fault::maybe_corrupt(fault::kSumMoments, values);
  return SumMomentTable(std::move(values));
}

Rational sum_moment_enumerated(const MomentSequence& mu, unsigned k, unsigned n) {
  if (mu.order() < n) throw InputError("moment list too short for E S_k^n with n = " + std::to_string(n));
  Rational acc = 0;
  // k = 0: the empty composition exists only for n = 0 (S_0 = 0)
  enumerate_parts(mu, n, k, Rational(1), acc);
  return Rational(factorial(n)) * acc;
}

}  // namespace appell
