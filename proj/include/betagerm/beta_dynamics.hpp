// Renyi expansion of 1 in base beta: exact iteration of x -> beta*x - floor
// in Q(beta), greedy digit extraction, and eventual-periodicity detection by
// exact state lookup. Exact orbit states make Simple / EventuallyPeriodic
// classification decidable; floating orbits cannot certify periodicity.
#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "betagerm/numberfield.hpp"

namespace betagerm {

struct InsufficientDigits : std::runtime_error {
  explicit InsufficientDigits(const std::string& what) : std::runtime_error(what) {}
};
struct NotParryResolved : std::runtime_error {
  explicit NotParryResolved(const std::string& what) : std::runtime_error(what) {}
};

enum class ExpansionKind { Simple, EventuallyPeriodic, Unresolved };

struct BetaExpansion {
  std::shared_ptr<const NumberField> K;
  ExpansionKind kind = ExpansionKind::Unresolved;
  int m = 0;       // Simple: digit count; EventuallyPeriodic: preperiod length
  int period = 0;  // p+1 for EventuallyPeriodic, 0 otherwise
  long bound = 0;  // iteration bound for Unresolved runs
  // Simple: t_1..t_m. EventuallyPeriodic: t_1..t_{m+period} (cycle included).
  // Unresolved: the digit prefix produced within the bound.
  std::vector<Int> digits;
  std::vector<NFElem> orbit;  // states T^n(1), n = 0 .. digits.size()

  bool is_parry() const { return kind != ExpansionKind::Unresolved; }
  bool is_simple() const { return kind == ExpansionKind::Simple; }

  // t_j (1-based), reconstructed from the cycle beyond the stored digits.
  Int digit(long j) const;
  long available_digits() const;  // LONG_MAX-ish for Parry, prefix length otherwise

  // d_P = m + p + 1 (non-simple) or m (simple).
  int parry_degree() const;
  std::string describe() const;
};

// Greedy expansion of 1 under T_beta, at most max_iter exact steps.
BetaExpansion greedy_expansion(const AlgebraicNumber& beta, long max_iter = 10000);
BetaExpansion greedy_expansion(const std::shared_ptr<const NumberField>& K,
                               long max_iter = 10000);

// Projection of the classification tag with the consistency checks
// (final digit >= 1 for Simple, exact state recurrence for periodic,
// alphabet bound). Throws std::logic_error on an inconsistent value.
ExpansionKind classify(const BetaExpansion& e);

struct ParryUpperTruncation {
  IntPoly poly;     // -1 + sum_{i<=N} t_i z^i
  int order = 0;    // N
  Int digit_bound;  // alphabet bound, tail coefficient

  // ceil(beta-1) * |z|^{N+1} / (1 - |z|), valid for |z| < 1.
  Real tail_bound(const Real& abs_z) const;
  Complex eval(const Complex& z) const;
};

// Truncation of f_beta(z) = -1 + sum t_i z^i at order N; digits beyond the
// stored cycle are reconstructed exactly. Throws InsufficientDigits for
// unresolved expansions shorter than N.
ParryUpperTruncation parry_upper_truncation(const BetaExpansion& e, int order);

}  // namespace betagerm
