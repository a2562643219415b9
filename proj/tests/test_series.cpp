#include "betagerm/series.hpp"

#include "doctest.h"

using namespace betagerm;

namespace {
RatSeries rs(std::vector<long> v) {
  std::vector<Rat> c(v.begin(), v.end());
  return RatSeries(std::move(c));
}
}  // namespace

TEST_CASE("(1+U)(1-U) at order 4 is 1 - U^2") {
  RatSeries a = rs({1, 1, 0, 0, 0});
  RatSeries b = rs({1, -1, 0, 0, 0});
  CHECK((a * b) == rs({1, 0, -1, 0, 0}));
}

TEST_CASE("reciprocal of 1-U at order 3 is the geometric series") {
  RatSeries a = rs({1, -1, 0, 0});
  CHECK(reciprocal(a) == rs({1, 1, 1, 1}));
}

TEST_CASE("compose V + V^2 with V = 2U at order 2") {
  RatSeries outer = rs({0, 1, 1});
  RatSeries inner = rs({0, 2, 0});
  CHECK(compose(outer, inner) == rs({0, 2, 4}));
}

TEST_CASE("compose requires vanishing inner constant term") {
  CHECK_THROWS_AS(compose(rs({0, 1}), rs({1, 1})), std::invalid_argument);
}

TEST_CASE("reciprocal of a non-unit throws NotAUnit") {
  CHECK_THROWS_AS(reciprocal(rs({0, 1})), NotAUnit);
}

TEST_CASE("operations are exact through the minimum truncation order") {
  RatSeries a = rs({1, 2, 3});          // order 2
  RatSeries b = rs({1, 1, 1, 1, 1});    // order 4
  RatSeries p = a * b;
  CHECK(p.order() == 2);
  CHECK(p == rs({1, 3, 6}));
}

TEST_CASE("series over a number field") {
  auto K = NumberField::make(AlgebraicNumber(IntPoly(std::vector<Int>{-1, -1, 1})));
  NFElem phi = NFElem::generator(K);
  NFElem one = NFElem::from_rat(K, 1);
  NFSeries s(std::vector<NFElem>{one, phi, phi * phi});
  NFSeries inv = reciprocal(s);
  NFSeries prod = s * inv;
  CHECK(prod.c[0] == one);
  CHECK(prod.c[1].is_zero());
  CHECK(prod.c[2].is_zero());
  CHECK(s.valuation() == 0);
  NFSeries shifted(std::vector<NFElem>{one.zero(), one.zero(), phi});
  CHECK(shifted.valuation() == 2);
}
