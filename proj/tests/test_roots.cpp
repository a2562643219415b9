#include "betagerm/roots.hpp"

#include <algorithm>

#include "doctest.h"

using namespace betagerm;

namespace {
IntPoly ip(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("roots of X^2 - X - 1 match the quadratic formula") {
  const unsigned bits = 128;
  ScopedPrecision prec(bits + 32);
  auto balls = poly_roots(ip({-1, -1, 1}), bits);
  REQUIRE(balls.size() == 2);
  Real s5 = sqrt(Real(5));
  Real lo = (1 - s5) / 2, hi = (1 + s5) / 2;
  CHECK(abs(balls[0].center - Complex(lo)) < pow(Real(2), -100));
  CHECK(abs(balls[1].center - Complex(hi)) < pow(Real(2), -100));
}

TEST_CASE("roots of X^2 - X + 1 are the primitive sixth roots of unity") {
  const unsigned bits = 128;
  ScopedPrecision prec(bits + 32);
  auto balls = poly_roots(ip({1, -1, 1}), bits);
  REQUIRE(balls.size() == 2);
  for (const auto& b : balls) {
    CHECK(abs(b.center.re - Real(0.5)) < pow(Real(2), -100));
    CHECK(abs(abs(b.center.im) - sqrt(Real(3)) / 2) < pow(Real(2), -100));
  }
}

TEST_CASE("multiple roots are detected exactly") {
  auto balls = poly_roots(ip({1, -2, 1}), 96);  // (X-1)^2
  REQUIRE(balls.size() == 1);
  CHECK(balls[0].multiplicity == 2);
  ScopedPrecision prec(128);
  CHECK(abs(balls[0].center - Complex(Real(1))) < pow(Real(2), -90));
}

TEST_CASE("multiplicities sum to the degree and root sum matches the trace") {
  const unsigned bits = 128;
  ScopedPrecision prec(bits + 32);
  // (X^2+3X+5)(X-2)^3 expanded: trace check against -a_{d-1}/a_d
  IntPoly p = ip({1, 3, 1}) * ip({-2, 1}) * ip({-2, 1}) * ip({-2, 1});
  auto balls = poly_roots(p, bits);
  int total = 0;
  Complex sum(Real(0));
  for (const auto& b : balls) {
    total += b.multiplicity;
    for (int i = 0; i < b.multiplicity; ++i) sum += b.center;
  }
  CHECK(total == p.degree());
  Real expected = -Real(p.c[p.c.size() - 2]) / Real(p.lead());
  CHECK(abs(sum - Complex(expected)) < pow(Real(2), -(static_cast<long>(bits) - 8)));
}
