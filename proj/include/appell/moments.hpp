#pragma once

#include "appell/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appell {

enum class DistributionKind {
  PointMassOne,           // Y = 1
  Uniform01,              // U on [0,1] (same law as beta(1))
  Beta,                   // density m(1-x)^{m-1} on [0,1]
  Bernoulli,              // X(beta)
  BernoulliTimesUniform,  // X(beta) * U, independent
  Custom,
};

struct DistributionTag {
  DistributionKind kind = DistributionKind::Custom;
  unsigned m = 1;        // Beta only
  Rational beta = 0;     // Bernoulli variants only
  std::string source;    // Custom only: where the moments came from

  /// Descriptor string as accepted by parse_distribution ("beta:3", "bernoulli:1/2", ...).
  std::string describe() const;
};

/// Exact moments mu_0..mu_N of a random variable Y; mu_0 = 1 always.
class MomentSequence {
 public:
  /// Throws InputError if moments is empty or mu_0 != 1.
  MomentSequence(std::vector<Rational> moments, DistributionTag tag);

  std::size_t order() const { return moments_.size() - 1; }
  const std::vector<Rational>& moments() const { return moments_; }
  const Rational& moment(std::size_t j) const { return moments_.at(j); }
  const DistributionTag& tag() const { return tag_; }

  /// Copy keeping only mu_0..mu_N.
  MomentSequence truncated(std::size_t order) const;

 private:
  std::vector<Rational> moments_;
  DistributionTag tag_;
};

/// Closed-form moments of a named law. Throws DomainError for beta outside [0,1]
/// or m = 0, UsageError for the Custom kind.
MomentSequence make_named(const DistributionTag& tag, std::size_t order);

MomentSequence point_mass_one(std::size_t order);
MomentSequence uniform01(std::size_t order);
MomentSequence beta_law(unsigned m, std::size_t order);
MomentSequence bernoulli_law(const Rational& beta, std::size_t order);
MomentSequence bernoulli_times_uniform(const Rational& beta, std::size_t order);

/// Parses a {"moments": ["p/q", ...]} document. With `order` set, requires at
/// least order+1 entries and truncates to exactly that many. Throws InputError.
MomentSequence load_custom_moments(std::string_view json_text, std::optional<std::size_t> order = {},
                                   std::string source = "inline");

/// Reads the document from disk; unreadable files are InputErrors too.
MomentSequence load_custom_moments_file(const std::string& path, std::optional<std::size_t> order = {});

/// Parses "point-mass-one", "uniform01", "beta:m", "bernoulli:b",
/// "bernoulli-times-uniform:b" or "custom:<path>".
MomentSequence parse_distribution(std::string_view descriptor, std::size_t order);

/// values[k][n] = E S_k^n, S_k = Y_1 + ... + Y_k iid, S_0 = 0, for 0 <= k,n <= N.
class SumMomentTable {
 public:
  explicit SumMomentTable(std::vector<std::vector<Rational>> values) : values_(std::move(values)) {}

  std::size_t order() const { return values_.size() - 1; }
  const Rational& at(std::size_t k, std::size_t n) const { return values_.at(k).at(n); }
  const std::vector<Rational>& row(std::size_t k) const { return values_.at(k); }
  const std::vector<std::vector<Rational>>& values() const { return values_; }
  std::vector<std::vector<Rational>>& mutable_values() { return values_; }

 private:
  std::vector<std::vector<Rational>> values_;
};

/// Production route: E S_k^n = sum_j C(n,j) mu_j E S_{k-1}^{n-j}.
SumMomentTable sum_moment_table(const MomentSequence& mu, std::size_t order);

/// Oracle route: direct sum over j_1+...+j_k = n of n!/(j_1!...j_k!) mu_{j_1}...mu_{j_k}.
/// Exponential cost; meant for k, n <= 10 or so.
Rational sum_moment_enumerated(const MomentSequence& mu, unsigned k, unsigned n);

}  // namespace appell
