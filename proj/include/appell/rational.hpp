#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace appell {

using Integer = mpz_class;

/// Raised when a string does not hold an exact rational of the form "p" or "p/q".
class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact fraction backed by GMP. Always canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(unsigned v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading '-', no spaces, q != 0). Decimals are rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// r^k for natural k, with 0^0 = 1.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace appell
