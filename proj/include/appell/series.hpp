#pragma once

#include "appell/rational.hpp"

#include <stdexcept>
#include <vector>

namespace appell {

class MomentSequence;

/// Thrown when a series operation's precondition (constant term, matching order) fails.
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated exponential generating function sum_{n<=N} u_n z^n/n! over the rationals.
class TruncatedEGF {
 public:
  /// Zero series of order N.
  explicit TruncatedEGF(std::size_t order);
  /// Takes u_0..u_N; the list must be non-empty.
  explicit TruncatedEGF(std::vector<Rational> coeffs);

  static TruncatedEGF zero(std::size_t order) { return TruncatedEGF(order); }
  static TruncatedEGF one(std::size_t order);
  /// e^{a z}: u_n = a^n.
  static TruncatedEGF exponential(std::size_t order, const Rational& a = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }

  TruncatedEGF& operator+=(const TruncatedEGF& o);
  TruncatedEGF& operator-=(const TruncatedEGF& o);
  TruncatedEGF& operator*=(const Rational& s);

  friend TruncatedEGF operator+(TruncatedEGF a, const TruncatedEGF& b) { return a += b; }
  friend TruncatedEGF operator-(TruncatedEGF a, const TruncatedEGF& b) { return a -= b; }
  friend TruncatedEGF operator*(TruncatedEGF a, const Rational& s) { return a *= s; }
  friend TruncatedEGF operator*(const Rational& s, TruncatedEGF a) { return a *= s; }

  friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Binomial convolution (a*b)_n = sum_k C(n,k) a_k b_{n-k}.
TruncatedEGF egf_mul(const TruncatedEGF& a, const TruncatedEGF& b);

/// Formal logarithm; requires u_0 = 1.
TruncatedEGF egf_log(const TruncatedEGF& a);

/// Formal exponential; requires u_0 = 0.
TruncatedEGF egf_exp(const TruncatedEGF& a);

/// a^t = exp(t log a) for rational t; requires u_0 = 1.
TruncatedEGF egf_pow(const TruncatedEGF& a, const Rational& t);

/// Moment generating function E e^{zY} truncated at N: u_n = mu_n.
TruncatedEGF egf_from_moments(const MomentSequence& mu, std::size_t order);

}  // namespace appell
