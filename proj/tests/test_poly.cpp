#include "betagerm/poly.hpp"

#include "doctest.h"

using namespace betagerm;

namespace {
IntPoly ip(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("polynomial ring basics") {
  IntPoly a = ip({-1, -1, 1});  // X^2 - X - 1
  IntPoly b = ip({1, 1});       // X + 1
  CHECK((a * b) == ip({-1, -2, 0, 1}));
  CHECK((a + b) == ip({0, 0, 1}));
  CHECK(eval_poly(a, Int(2)) == 1);
  CHECK(derivative(a) == ip({-1, 2}));
}

TEST_CASE("reciprocal is an involution away from zero constant term") {
  IntPoly p = ip({-1, 0, -1, 1});  // X^3 - X^2 - 1 (nonzero constant)
  CHECK(reciprocal(reciprocal(p)) == p);
  CHECK(reciprocal(p) == ip({1, -1, 0, -1}));
}

TEST_CASE("divmod and exact division") {
  IntPoly p = ip({-1, 0, 0, 0, -1, 1});  // X^5 - X^4 - 1
  IntPoly f = ip({-1, -1, 0, 1});        // X^3 - X - 1
  IntPoly q;
  REQUIRE(divide_exact(p, f, q));
  CHECK(q == ip({1, -1, 1}));  // X^2 - X + 1
  IntPoly not_factor = ip({1, 1});
  CHECK_FALSE(divide_exact(p, not_factor, q));
}

TEST_CASE("shift substitutes X + s") {
  RatPoly p = to_rat(ip({0, 0, 1}));  // X^2
  RatPoly s = shift(p, Rat(1));       // (X+1)^2
  CHECK(s == RatPoly(std::vector<Rat>{1, 2, 1}));
}

TEST_CASE("sturm isolation finds and separates real roots") {
  IntPoly p = ip({-1, -1, 1});  // roots (1 +- sqrt5)/2
  auto roots = isolate_real_roots(p, Rat(-10), Rat(10));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].second <= roots[1].first);  // (a,b] intervals may touch
  IntPoly q = ip({1, 0, 1});  // X^2 + 1, no real roots
  CHECK(isolate_real_roots(q, Rat(-10), Rat(10)).empty());
}

TEST_CASE("squarefree part strips multiplicities") {
  IntPoly sq = ip({1, -2, 1});  // (X-1)^2
  CHECK(squarefree_part(sq) == ip({-1, 1}));
}
