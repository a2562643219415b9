#include "betagerm/factorq.hpp"

#include <random>

#include "doctest.h"

using namespace betagerm;

namespace {
IntPoly ip(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("X^5 - X^4 - 1 factors as (X^3-X-1)(X^2-X+1)") {
  auto f = poly_factor_q(ip({-1, 0, 0, 0, -1, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.content == 1);
  CHECK(f.factors[0].first == ip({1, -1, 1}));
  CHECK(f.factors[1].first == ip({-1, -1, 0, 1}));
  CHECK(f.expand() == ip({-1, 0, 0, 0, -1, 1}));
}

TEST_CASE("X^2 - X - 1 is irreducible") {
  auto f = poly_factor_q(ip({-1, -1, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].second == 1);
  CHECK(is_irreducible_q(ip({-1, -1, 1})));
}

TEST_CASE("X^2 - 1 splits into linear factors") {
  auto f = poly_factor_q(ip({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == ip({-1, 1}));
  CHECK(f.factors[1].first == ip({1, 1}));
}

TEST_CASE("factorization re-expands exactly on random products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int trial = 0; trial < 8; ++trial) {
    IntPoly p = ip({1});
    for (int k = 0; k < 3; ++k) {
      std::vector<long> v = {coeff(rng), coeff(rng), 1};
      if (v[0] == 0) v[0] = 1;
      p = p * ip(v);
    }
    auto f = poly_factor_q(p);
    CHECK(f.expand() == p);
  }
}

TEST_CASE("multiplicities are reported") {
  IntPoly p = ip({-1, 1}) * ip({-1, 1}) * ip({1, 1});
  auto f = poly_factor_q(p);
  REQUIRE(f.factors.size() == 2);
  bool saw_double = false;
  for (auto& [fac, mult] : f.factors)
    if (fac == ip({-1, 1})) {
      CHECK(mult == 2);
      saw_double = true;
    }
  CHECK(saw_double);
  CHECK(f.expand() == p);
}

TEST_CASE("content is preserved") {
  IntPoly p = ip({-6, 0, 6});  // 6(X-1)(X+1)
  auto f = poly_factor_q(p);
  CHECK(f.content == 6);
  CHECK(f.expand() == p);
}
