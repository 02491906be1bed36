#pragma once

#include "appell/moments.hpp"
#include "appell/rational.hpp"

#include <vector>

namespace appell {

enum class StirlingRoute { DefinitionSum, GeneratingFunction, Lemma2Expansion, Recurrence };

const char* to_string(StirlingRoute route);

/// Lower-triangular table values[n][m], 0 <= m <= n <= N. Row n has n+1 entries;
/// there is no storage for m > n, and at() rejects it.
class StirlingTable {
 public:
  StirlingTable(std::vector<std::vector<Rational>> rows, StirlingRoute source);

  std::size_t order() const { return rows_.size() - 1; }
  StirlingRoute source() const { return source_; }
  /// Throws std::out_of_range when m > n or n > N.
  const Rational& at(std::size_t n, std::size_t m) const;
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend bool operator==(const StirlingTable& a, const StirlingTable& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  StirlingRoute source_;
};

// Classical S(n,m).

/// (1/m!) sum_k C(m,k)(-1)^{m-k} k^n. Throws std::invalid_argument for m > n.
Integer stirling_classical(unsigned n, unsigned m);

/// S(n,m) from the recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1), memoized
/// process-wide and grown on demand. Zero for m > n.
const Rational& classical_stirling(unsigned n, unsigned m);

/// Snapshot of the memoized recurrence triangle through row N.
StirlingTable classical_stirling_table(std::size_t order);

/// Triangle filled entry-by-entry from stirling_classical.
StirlingTable classical_stirling_defsum_table(std::size_t order);

// Probabilistic S_Y(n,m). All three routes must agree exactly.

/// (1/m!) sum_k C(m,k)(-1)^{m-k} E S_k^n from a precomputed sum-moment table.
Rational stirling_prob_defsum(const SumMomentTable& sums, unsigned n, unsigned m);
Rational stirling_prob_defsum(const MomentSequence& mu, unsigned n, unsigned m);

/// Coefficient of z^n/n! in (E e^{zY} - 1)^m / m!, series truncated at `order`.
Rational stirling_prob_gf(const MomentSequence& mu, unsigned n, unsigned m, std::size_t order);

/// C(n,m) E[Y_1...Y_m (Y_1 U_1 + ... + Y_m U_m)^{n-m}] expanded multinomially.
Rational stirling_prob_lemma2(const MomentSequence& mu, unsigned n, unsigned m);

/// Whole triangle by one route. DefinitionSum is the production route.
StirlingTable stirling_prob_table(const MomentSequence& mu, std::size_t order,
                                  StirlingRoute route = StirlingRoute::DefinitionSum);

}  // namespace appell
