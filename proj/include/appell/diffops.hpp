#pragma once

#include "appell/moments.hpp"
#include "appell/polynomial.hpp"

#include <span>

namespace appell {

/// Single forward difference: q(x) = p(x + step) - p(x).
Polynomial delta(const Polynomial& p, const Rational& step);

/// Generalized m-th difference with steps a_1..a_m, as the iterate
/// Delta_{a_1} o ... o Delta_{a_m}, evaluated at x. An empty step list returns p(x).
Rational delta_steps(const Polynomial& p, std::span<const Rational> steps, const Rational& x);

/// Same quantity from the alternating sum over index subsets:
/// sum_{I subset of steps} (-1)^{m-|I|} p(x + sum_{i in I} a_i). O(2^m).
Rational delta_steps_subsets(const Polynomial& p, std::span<const Rational> steps, const Rational& x);

/// a_1...a_m E p^{(m)}(x + a_1 U_1 + ... + a_m U_m), U_i iid uniform on [0,1],
/// expanded exactly through the moments E U^j = 1/(j+1).
Rational delta_derivative_form(const Polynomial& p, std::span<const Rational> steps, const Rational& x);

/// sum_k C(m,k)(-1)^{m-k} E S_k^n: the expected m-th difference of y^n at 0
/// with iid random steps Y_1..Y_m. Needs mu through order max(n, m).
Rational expected_delta_monomial(const MomentSequence& mu, unsigned n, unsigned m);

}  // namespace appell
