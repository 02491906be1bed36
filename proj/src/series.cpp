#include "appell/series.hpp"

#include "appell/combinatorics.hpp"
#include "appell/moments.hpp"

namespace appell {

namespace {

void require_same_order(const TruncatedEGF& a, const TruncatedEGF& b) {
  if (a.order() != b.order()) {
    throw SeriesError("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  }
}

}  // namespace

TruncatedEGF::TruncatedEGF(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedEGF::TruncatedEGF(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeriesError("series needs at least the constant coefficient");
}

TruncatedEGF TruncatedEGF::one(std::size_t order) {
  TruncatedEGF out(order);
  out[0] = 1;
  return out;
}

TruncatedEGF TruncatedEGF::exponential(std::size_t order, const Rational& a) {
  TruncatedEGF out(order);
  Rational power = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = power;
    power *= a;
  }
  return out;
}

TruncatedEGF& TruncatedEGF::operator+=(const TruncatedEGF& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedEGF& TruncatedEGF::operator-=(const TruncatedEGF& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedEGF& TruncatedEGF::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedEGF egf_mul(const TruncatedEGF& a, const TruncatedEGF& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  TruncatedEGF out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc += Rational(binomial(n, k)) * a[k] * b[n - k];
    }
    out[n] = acc;
  }
  return out;
}

TruncatedEGF egf_log(const TruncatedEGF& a) {
  if (a[0] != Rational(1)) {
    throw SeriesError("egf_log requires constant term 1, got " + a[0].str());
  }
  const std::size_t order = a.order();
  TruncatedEGF b(order);
  // a' = a b'  =>  b_{n+1} = a_{n+1} - sum_{j<n} C(n,j) a_{n-j} b_{j+1}
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = a[n + 1];
    for (std::size_t j = 0; j < n; ++j) acc -= Rational(binomial(n, j)) * a[n - j] * b[j + 1];
    b[n + 1] = acc;
  }
  return b;
}

TruncatedEGF egf_exp(const TruncatedEGF& a) {
  if (!a[0].is_zero()) {
    throw SeriesError("egf_exp requires constant term 0, got " + a[0].str());
  }
  const std::size_t order = a.order();
  TruncatedEGF c(order);
  c[0] = 1;
  // c' = c a'
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= n; ++j) acc += Rational(binomial(n, j)) * c[n - j] * a[j + 1];
    c[n + 1] = acc;
  }
  return c;
}

TruncatedEGF egf_pow(const TruncatedEGF& a, const Rational& t) {
  if (a[0] != Rational(1)) {
    throw SeriesError("egf_pow requires constant term 1, got " + a[0].str());
  }
  return egf_exp(t * egf_log(a));
}

TruncatedEGF egf_from_moments(const MomentSequence& mu, std::size_t order) {
  if (mu.moments().empty() || mu.moment(0) != Rational(1)) {
    throw SeriesError("moment sequence must have mu_0 = 1");
  }
  if (mu.order() < order) {
    throw SeriesError("moment sequence has order " + std::to_string(mu.order()) + ", need " +
                      std::to_string(order));
  }
  return TruncatedEGF(std::vector<Rational>(mu.moments().begin(), mu.moments().begin() + order + 1));
}

}  // namespace appell
