#pragma once

#include "appell/moments.hpp"
#include "appell/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace appell {

enum class FamilyKind {
  GenBernoulli,        // B(t,m;x):  Y = beta_m
  BernoulliOrder,      // B(t;x) = B(t,1;x)
  ClassicalBernoulli,  // B(x) = B(1;x)
  ApostolEuler,        // E(t,beta;x): Y = X(beta)
  ClassicalEuler,      // E(x) = E(1,1/2;x)
  BStar,               // B*(t,beta;x): Y = X(beta) U
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::ClassicalBernoulli;
  Rational t = 1;
  unsigned m = 1;
  Rational beta = 1;

  /// Canonical selector string, e.g. "apostol-euler:1,1/2".
  std::string describe() const;
};

/// Parses classical-bernoulli | gen-bernoulli:t,m | bernoulli-order:t |
/// apostol-euler:t,beta | classical-euler | bstar:t,beta. Unknown names and
/// malformed parameters throw UsageError; beta outside [0,1] or m = 0 throw DomainError.
FamilySpec parse_family(std::string_view selector);

/// The (Y, t) pair whose E_t(Y) sequence the family is.
struct FamilyLaw {
  MomentSequence moments;
  Rational t;
};
FamilyLaw family_law(const FamilySpec& spec, std::size_t order);

/// E S_k^n for Y = beta_m from n! (m!)^k sum_{j_1+..+j_k=n} 1/((m+j_1)!...(m+j_k)!).
Rational c_mnk(unsigned m, unsigned n, unsigned k);

/// B_n(t,m;0) = sum_k C(-t,k) C(n+t,n-k) C(m,n,k).
std::vector<Rational> gen_bernoulli_constants(const Rational& t, unsigned m, std::size_t order);

/// B_n(t;0) = sum_k C(-t,k) C(n+t,n-k) S(n+k,k)/C(n+k,n).
std::vector<Rational> bernoulli_order_constants(const Rational& t, std::size_t order);

/// E_n(t,beta;0) = sum_m C(-t,m) beta^m m! S(n,m).
std::vector<Rational> apostol_euler_constants(const Rational& t, const Rational& beta, std::size_t order);

/// B*_n(t,beta;0) = sum_m C(-t,m) beta^m sum_k C(m,k)(-1)^{m-k} S(n+k,k)/C(n+k,n).
std::vector<Rational> bstar_constants(const Rational& t, const Rational& beta, std::size_t order);

/// Closed-form constants for any family selector.
std::vector<Rational> family_constants(const FamilySpec& spec, std::size_t order);

}  // namespace appell
