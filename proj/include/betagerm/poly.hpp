// Dense univariate polynomials over the exact coefficient rings used by the
// library: Int (Z), Rat (Q). Coefficients are stored low degree first;
// the zero polynomial is the empty vector.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betagerm/numeric.hpp"

namespace betagerm {

template <class T>
struct Poly {
  std::vector<T> c;  // c[i] multiplies X^i; no trailing zeros

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly x_power(std::size_t k, T lead = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(lead);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const T& lead() const { return c.back(); }
  T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(0); }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
};

template <class T>
bool operator==(const Poly<T>& a, const Poly<T>& b) {
  return a.c == b.c;
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
  std::vector<T> r = a.c;
  for (auto& v : r) v = -v;
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const T& s) {
  std::vector<T> r = a.c;
  for (auto& v : r) v *= s;
  return Poly<T>(std::move(r));
}

template <class T, class V>
V eval_poly(const Poly<T>& p, const V& x) {
  V acc(0);
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + V(p.c[i]);
  return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.c.size() <= 1) return {};
  std::vector<T> r(p.c.size() - 1);
  for (std::size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * T(static_cast<long>(i));
  return Poly<T>(std::move(r));
}

// X^deg * p(1/X). Requires p(0) != 0 for the involution property.
template <class T>
Poly<T> reciprocal(const Poly<T>& p) {
  std::vector<T> r(p.c.rbegin(), p.c.rend());
  return Poly<T>(std::move(r));
}

// Substitute X -> X + s.
template <class T>
Poly<T> shift(const Poly<T>& p, const T& s) {
  Poly<T> acc;
  Poly<T> xs(std::vector<T>{s, T(1)});
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * xs + Poly<T>(std::vector<T>{p.c[i]});
  return acc;
}

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> r(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) r[i] = Rat(p.c[i]);
  return RatPoly(std::move(r));
}

inline Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& v : p.c) g = gcd(g, v);
  return g;
}

// Scales a rational polynomial to a primitive integer polynomial with
// positive leading coefficient.
inline IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Int l = 1;
  for (const auto& v : p.c) l = lcm(l, denominator(v));
  std::vector<Int> r(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) r[i] = numerator(p.c[i] * Rat(l));
  IntPoly q(std::move(r));
  Int g = content(q);
  if (q.lead() < 0) g = -g;
  for (auto& v : q.c) v /= g;
  return q;
}

// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  RatPoly r = a, q;
  q.c.assign(a.c.size(), Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    Rat f = r.lead() / b.lead();
    q.c[k] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + k] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

// Exact division of integer polynomials; returns false if b does not divide a.
inline bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero()) return false;
  for (const auto& v : q.c)
    if (denominator(v) != 1) return false;
  std::vector<Int> qi(q.c.size());
  for (std::size_t i = 0; i < q.c.size(); ++i) qi[i] = numerator(q.c[i]);
  quotient = IntPoly(std::move(qi));
  return true;
}

// Monic gcd over Q.
inline RatPoly gcd_poly(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat l = a.lead();
    for (auto& v : a.c) v /= l;
  }
  return a;
}

// Squarefree part p / gcd(p, p').
inline IntPoly squarefree_part(const IntPoly& p) {
  RatPoly g = gcd_poly(to_rat(p), to_rat(derivative(p)));
  if (g.degree() <= 0) return primitive_part(to_rat(p));
  return primitive_part(divmod(to_rat(p), g).first);
}

// ---------------------------------------------------------------------------
// Sturm sequences and real root isolation (used for certified isolating
// intervals of real algebraic numbers).
// ---------------------------------------------------------------------------
std::vector<RatPoly> sturm_sequence(const RatPoly& p);
int sturm_sign_changes(const std::vector<RatPoly>& seq, const Rat& x);
// Number of real roots in (a, b], assuming a squarefree generator.
int count_roots(const std::vector<RatPoly>& seq, const Rat& a, const Rat& b);
// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const IntPoly& p);
// Isolating intervals (a, b] for all real roots in (lo, hi], each containing
// exactly one root. Requires squarefree p.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                    const Rat& hi);

int sign_at(const RatPoly& p, const Rat& x);

}  // namespace betagerm
