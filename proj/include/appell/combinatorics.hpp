#pragma once

#include "appell/rational.hpp"

#include <span>

namespace appell {

/// n!, memoized process-wide. Safe for concurrent callers.
const Integer& factorial(unsigned n);

/// Ordinary binomial C(n, k) for naturals; 0 when k > n.
Integer binomial(unsigned n, unsigned k);

/// Generalized binomial C(s, k) = s(s-1)...(s-k+1)/k! for rational s.
Rational gen_binomial(const Rational& s, unsigned k);

/// n!/(j_1!...j_k!). Throws std::invalid_argument if the parts do not sum to n.
Integer multinomial(unsigned n, std::span<const unsigned> parts);

/// Checks sum_{i=0}^{p} C(s+i, i) == C(s+1+p, p) exactly.
bool hockey_stick_check(const Rational& s, unsigned p);

}  // namespace appell
