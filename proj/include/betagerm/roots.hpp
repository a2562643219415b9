// High-precision complex root finding with a posteriori certification.
//
// Exact inputs go through squarefree decomposition first (multiple roots are
// detected by exact gcd over Q, never numerically), then each squarefree
// factor is solved by Aberth-Ehrlich simultaneous iteration with Gerschgorin
// style inclusion discs: for approximations z_1..z_n of a degree-n polynomial
// p, each disc D(z_k, n |p(z_k)| / (|lc| prod_{j!=k} |z_k - z_j|)) meets the
// root set, and pairwise disjoint discs isolate one root each. Precision
// escalates x2 until the discs are disjoint and below the requested radius.
#pragma once

#include <vector>

#include "betagerm/numeric.hpp"
#include "betagerm/poly.hpp"

namespace betagerm {

struct RootBall {
  Complex center;
  Real radius;     // certified inclusion radius
  int multiplicity = 1;
};

// All complex roots of p with multiplicities; certified radius <= 2^-bits.
// Throws PrecisionExhausted if certification fails at the precision ceiling.
std::vector<RootBall> poly_roots(const IntPoly& p, unsigned bits);
std::vector<RootBall> poly_roots(const RatPoly& p, unsigned bits);

// Squarefree decomposition p = prod out[i].first ^ out[i].second over Q
// (Yun's algorithm); factors are primitive integer polynomials.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Aberth iteration on (possibly inexact) complex coefficients, low degree
// first. Returns root approximations; radii[k] receives the inclusion radius.
// Deterministic: fixed starting configuration, no randomness.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, unsigned work_bits,
                                  std::vector<Real>* radii = nullptr);

}  // namespace betagerm
