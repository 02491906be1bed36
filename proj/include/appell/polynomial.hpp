#pragma once

#include "appell/rational.hpp"

#include <string>
#include <vector>

namespace appell {

/// Dense polynomial sum c_i x^i with exact coefficients. Trailing zeros are
/// trimmed, so the leading coefficient is nonzero unless p == 0 (stored as [0]).
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(0)} {}
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// c_i, or 0 beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  /// Horner evaluation, exact.
  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// p(x + a) as a polynomial in x.
  Polynomial shifted(const Rational& a) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human form, highest power first: "x^2 - x + 1/6".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational evaluate(const Polynomial& p, const Rational& x);

/// Horner in double precision. Coefficients are rounded to double on entry;
/// this is the only place the library leaves exact arithmetic.
double evaluate_float(const Polynomial& p, double x);

}  // namespace appell
