// Arithmetic in Q(beta) for one fixed real algebraic beta > 1. Elements are
// kept in canonical form: exactly deg(beta) rational coordinates on the power
// basis 1, beta, ..., beta^{d-1}, always reduced modulo the minimal
// polynomial. Canonical form makes equality (and rationality) decidable
// coefficient-wise; the real embedding is evaluated by exact interval
// arithmetic on refinements of beta.
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "betagerm/algebraic.hpp"
#include "betagerm/poly.hpp"

namespace betagerm {

struct NumberField {
  AlgebraicNumber beta;
  int d;
  std::vector<Rat> xd_red;  // beta^d = sum xd_red[i] beta^i

  static std::shared_ptr<const NumberField> make(AlgebraicNumber beta_in);
};

class NFElem {
 public:
  NFElem(std::shared_ptr<const NumberField> field, std::vector<Rat> coords);

  static NFElem from_rat(const std::shared_ptr<const NumberField>& field, const Rat& r);
  static NFElem generator(const std::shared_ptr<const NumberField>& field);  // beta itself

  const std::shared_ptr<const NumberField>& field() const { return K_; }
  const std::vector<Rat>& coords() const { return a_; }

  bool is_zero() const;
  bool is_rational() const;  // all coordinates above the constant vanish
  const Rat& rational_part() const { return a_[0]; }

  NFElem zero() const { return from_rat(K_, Rat(0)); }

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator*=(const Rat& r);

  NFElem inverse() const;  // via extended gcd with the minimal polynomial
  NFElem pow(long e) const;

  // Real embedding.
  std::pair<Rat, Rat> interval(unsigned bits) const;
  Real to_real(unsigned bits) const;
  Int floor() const;  // exact: rational branch decided coefficient-wise
  int sign() const;   // -1, 0, +1, exact

  friend bool operator==(const NFElem& x, const NFElem& y) { return x.a_ == y.a_; }

 private:
  std::shared_ptr<const NumberField> K_;
  std::vector<Rat> a_;
};

inline NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
inline NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
inline NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
inline NFElem operator*(NFElem a, const Rat& r) { return a *= r; }

// Spec-level operation names.
inline NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
inline Int nf_floor(const NFElem& a) { return a.floor(); }

// Dense polynomials over Q(beta); a separate type because coefficients carry
// the field handle.
struct NFPoly {
  std::shared_ptr<const NumberField> K;
  std::vector<NFElem> c;  // low degree first, no trailing zeros

  NFPoly() = default;
  NFPoly(std::shared_ptr<const NumberField> field, std::vector<NFElem> coeffs);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const NFElem& lead() const { return c.back(); }
  void trim();

  NFElem eval(const NFElem& x) const;
};

NFPoly nf_poly_from_rat(const std::shared_ptr<const NumberField>& K, const RatPoly& p);
NFPoly operator+(const NFPoly& a, const NFPoly& b);
NFPoly operator-(const NFPoly& a, const NFPoly& b);
NFPoly operator*(const NFPoly& a, const NFPoly& b);
NFPoly operator*(const NFPoly& a, const NFElem& s);
std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b);
// g = s*a + t*b with g monic gcd; used to invert residues.
NFPoly xgcd(const NFPoly& a, const NFPoly& b, NFPoly& s, NFPoly& t);

}  // namespace betagerm
