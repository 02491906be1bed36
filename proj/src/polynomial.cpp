#include "appell/polynomial.hpp"

#include "appell/combinatorics.hpp"

#include <algorithm>

namespace appell {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<unsigned long>(i)) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& a) const {
  // sum_i c_i (x+a)^i = sum_j x^j sum_{i>=j} c_i C(i,j) a^{i-j}
  const std::size_t size = coeffs_.size();
  std::vector<Rational> powers(size);
  powers[0] = 1;
  for (std::size_t i = 1; i < size; ++i) powers[i] = powers[i - 1] * a;
  std::vector<Rational> out(size, Rational(0));
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = j; i < size; ++i) {
      if (coeffs_[i].is_zero()) continue;
      out[j] += coeffs_[i] * Rational(binomial(i, j)) * powers[i - j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == Rational(1);
    if (i == 0 || !unit) out += magnitude.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Rational evaluate(const Polynomial& p, const Rational& x) { return p(x); }

double evaluate_float(const Polynomial& p, double x) {
  const auto& c = p.coeffs();
  double acc = c.back().to_double();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i].to_double();
  return acc;
}

}  // namespace appell
