#include "betagerm/algebraic.hpp"

#include "doctest.h"

using namespace betagerm;

namespace {
IntPoly ip(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("refine golden ratio to 20 bits") {
  AlgebraicNumber phi(ip({-1, -1, 1}), std::pair<Rat, Rat>(Rat(16, 10), Rat(17, 10)));
  auto [lo, hi] = phi.refine(20);
  CHECK(hi - lo <= pow_rat(Rat(1, 2), 20));
  // 1.6180339... is inside
  CHECK(lo < Rat(16180340, 10000000));
  CHECK(hi > Rat(16180339, 10000000));
}

TEST_CASE("rational root collapses to a point interval") {
  AlgebraicNumber three(ip({-3, 1}), std::pair<Rat, Rat>(Rat(5, 2), Rat(7, 2)));
  auto [lo, hi] = three.refine(50);
  CHECK(lo == 3);
  CHECK(hi == 3);
  CHECK(three.floor() == 3);
}

TEST_CASE("sqrt2 refinement at 10 bits") {
  AlgebraicNumber r2(ip({-2, 0, 1}), std::pair<Rat, Rat>(Rat(13, 10), Rat(15, 10)));
  auto [lo, hi] = r2.refine(10);
  CHECK(hi - lo <= pow_rat(Rat(1, 2), 10));
  CHECK(lo < Rat(1414214, 1000000));
  CHECK(hi > Rat(1414213, 1000000));
  CHECK(r2.floor() == 1);
}

TEST_CASE("refinements are nested and widths halve or better") {
  AlgebraicNumber theta(ip({-1, -1, 0, 1}));  // plastic number, default isolation
  Rat prev_lo(0), prev_hi(1000);
  Rat prev_width = prev_hi - prev_lo;
  for (unsigned bits = 4; bits <= 64; bits += 4) {
    auto [lo, hi] = theta.refine(bits);
    CHECK(lo >= prev_lo);
    CHECK(hi <= prev_hi);
    CHECK(hi - lo <= pow_rat(Rat(1, 2), bits));
    prev_lo = lo;
    prev_hi = hi;
  }
  CHECK(theta.floor() == 1);
}

TEST_CASE("constructor rejects reducible polynomials") {
  CHECK_THROWS_AS(AlgebraicNumber(ip({-1, 0, 1})), InvalidAlgebraicNumber);  // (X-1)(X+1)
}

TEST_CASE("constructor rejects numbers <= 1") {
  CHECK_THROWS_AS(AlgebraicNumber(ip({-1, 1})), NotGreaterThanOne);    // root exactly 1
  CHECK_THROWS_AS(AlgebraicNumber(ip({1, 0, 1})), NotGreaterThanOne);  // no real root
  CHECK_THROWS_AS(AlgebraicNumber(ip({1, -2})), NotGreaterThanOne);    // root 1/2
}

TEST_CASE("default isolation picks the largest real root above 1") {
  // X^2 - 3X + 1 has roots 0.381..., 2.618...
  AlgebraicNumber b(ip({1, -3, 1}));
  auto [lo, hi] = b.refine(8);
  CHECK(lo > Rat(5, 2));
  CHECK(hi < Rat(27, 10));
  CHECK(b.floor() == 2);
}

TEST_CASE("shifted number has consistent minimal polynomial") {
  AlgebraicNumber phi(ip({-1, -1, 1}));
  AlgebraicNumber shifted = phi.shifted(Rat(1, 100));
  auto [lo, hi] = shifted.refine(30);
  auto [plo, phi_hi] = phi.refine(30);
  CHECK(lo >= plo);  // moved right
  Rat diff_lo = lo - plo;
  CHECK(diff_lo < Rat(1, 50));
}
