#include "betagerm/numberfield.hpp"

#include <random>

#include "doctest.h"

using namespace betagerm;

namespace {
IntPoly ip(std::vector<long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}
std::shared_ptr<const NumberField> golden_field() {
  return NumberField::make(AlgebraicNumber(ip({-1, -1, 1})));
}
std::shared_ptr<const NumberField> plastic_field() {
  return NumberField::make(AlgebraicNumber(ip({-1, -1, 0, 1})));
}
}  // namespace

TEST_CASE("phi * phi = phi + 1") {
  auto K = golden_field();
  NFElem phi = NFElem::generator(K);
  NFElem one = NFElem::from_rat(K, 1);
  CHECK(phi * phi == phi + one);
}

TEST_CASE("theta^3 = theta + 1 in the plastic field") {
  auto K = plastic_field();
  NFElem t = NFElem::generator(K);
  CHECK(t.pow(3) == t + NFElem::from_rat(K, 1));
}

TEST_CASE("(phi - 1) * phi = 1") {
  auto K = golden_field();
  NFElem phi = NFElem::generator(K);
  NFElem one = NFElem::from_rat(K, 1);
  CHECK((phi - one) * phi == one);
}

TEST_CASE("nf_floor of phi^2 is 2") {
  auto K = golden_field();
  NFElem phi = NFElem::generator(K);
  CHECK(nf_floor(phi * phi) == 2);
}

TEST_CASE("nf_floor exact branch on constants") {
  auto K = plastic_field();
  CHECK(nf_floor(NFElem::from_rat(K, 3)) == 3);
  CHECK(nf_floor(NFElem::from_rat(K, Rat(-7, 2))) == -4);
}

TEST_CASE("(1+sqrt2)(sqrt2-1) = 1 exercises the exact branch") {
  auto K = NumberField::make(AlgebraicNumber(ip({-1, -2, 1})));  // beta = 1+sqrt2
  NFElem beta = NFElem::generator(K);                            // 1 + sqrt2
  NFElem one = NFElem::from_rat(K, 1);
  NFElem two = NFElem::from_rat(K, 2);
  NFElem sqrt2 = beta - one;
  NFElem value = (one + sqrt2) * (sqrt2 - one);
  CHECK(value == one);
  CHECK(value.is_rational());
  CHECK(nf_floor(value) == 1);
}

TEST_CASE("inverse round-trips") {
  auto K = plastic_field();
  NFElem t = NFElem::generator(K);
  NFElem v = t * t - NFElem::from_rat(K, Rat(1, 3));
  CHECK(v * v.inverse() == NFElem::from_rat(K, 1));
}

TEST_CASE("nf_mul is commutative and associative on random triples") {
  auto Kphi = golden_field();
  auto Ktheta = plastic_field();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  auto random_elem = [&](const std::shared_ptr<const NumberField>& K) {
    std::vector<Rat> v(K->d);
    for (auto& x : v) x = Rat(num(rng), den(rng));
    return NFElem(K, std::move(v));
  };
  for (const auto& K : {Kphi, Ktheta}) {
    for (int i = 0; i < 1000; ++i) {
      NFElem a = random_elem(K), b = random_elem(K), c = random_elem(K);
      CHECK(nf_mul(a, b) == nf_mul(b, a));
      CHECK(nf_mul(nf_mul(a, b), c) == nf_mul(a, nf_mul(b, c)));
    }
  }
}

TEST_CASE("floor brackets the embedded value on a random sample") {
  auto K = plastic_field();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rat> v(K->d);
    for (auto& x : v) x = Rat(num(rng), den(rng));
    NFElem a(K, std::move(v));
    Int f = nf_floor(a);
    auto [lo, hi] = a.interval(128);
    CHECK(Rat(f) <= hi);
    CHECK(Rat(f + 1) >= lo);
  }
}

TEST_CASE("degree-1 field works with non-monic minimal polynomial") {
  auto K = NumberField::make(AlgebraicNumber(ip({-3, 2})));  // beta = 3/2
  NFElem b = NFElem::generator(K);
  CHECK(b.is_rational());
  CHECK(b.rational_part() == Rat(3, 2));
  CHECK(nf_floor(b * b) == 2);  // 9/4
}

TEST_CASE("nf polynomial xgcd inverts residues") {
  auto K = golden_field();
  // gcd(Z^2+1, Z(Z-1)) over Q(phi)
  NFPoly a(K, {NFElem::from_rat(K, 1), NFElem::from_rat(K, 0), NFElem::from_rat(K, 1)});
  NFPoly b(K, {NFElem::from_rat(K, 0), NFElem::from_rat(K, -1), NFElem::from_rat(K, 1)});
  NFPoly s, t;
  NFPoly g = xgcd(a, b, s, t);
  CHECK(g.degree() == 0);  // coprime
  NFPoly lhs = s * a + t * b;
  REQUIRE(lhs.degree() == 0);
  CHECK(lhs.c[0] == NFElem::from_rat(K, 1));
}
