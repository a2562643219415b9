// Factorization of integer polynomials over Q, desk scale.
//
// Strategy: exact squarefree decomposition (gcd with the derivative), then
// certified high-precision roots of each squarefree part, grouped into real
// roots and conjugate pairs; candidate factors are products of root subsets
// with rounded coefficients, enumerated by increasing degree, and every hit
// is verified by exact division before being accepted. The numeric search
// only proposes candidates; correctness rests on the exact verification.
#pragma once

#include <utility>
#include <vector>

#include "betagerm/poly.hpp"

namespace betagerm {

struct Factorization {
  Int content = 1;  // signed integer content of the input
  std::vector<std::pair<IntPoly, int>> factors;  // irreducible, primitive, positive lead

  IntPoly expand() const;  // content * prod factors^mult
};

// Requires degree >= 1.
Factorization poly_factor_q(const IntPoly& p);

inline bool is_irreducible_q(const IntPoly& p) {
  if (p.degree() < 1) return false;
  auto f = poly_factor_q(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace betagerm
