// Truncated power series over an exact or numeric coefficient ring.
// A series of order N stores coefficients c_0..c_N; add/mul/compose of
// order-N inputs are exact through order N. Composition requires the inner
// series to have zero constant term; reciprocal requires a unit.
#pragma once

#include <vector>

#include "betagerm/numberfield.hpp"
#include "betagerm/numeric.hpp"

namespace betagerm {

template <class T>
T zero_like(const T& /*exemplar*/) {
  return T(0);
}
inline NFElem zero_like(const NFElem& exemplar) { return exemplar.zero(); }

template <class T>
bool coeff_is_zero(const T& v) {
  return v == T(0);
}
inline bool coeff_is_zero(const NFElem& v) { return v.is_zero(); }

inline Rat inverse_coeff(const Rat& v) { return Rat(1) / v; }
inline Complex inverse_coeff(const Complex& v) { return Complex(Real(1)) / v; }
inline NFElem inverse_coeff(const NFElem& v) { return v.inverse(); }

template <class T>
struct Series {
  std::vector<T> c;  // exactly order+1 entries

  Series() = default;
  explicit Series(std::vector<T> coeffs) : c(std::move(coeffs)) {}

  static Series constant(const T& v, int order) {
    std::vector<T> r(static_cast<std::size_t>(order) + 1, zero_like(v));
    r[0] = v;
    return Series(std::move(r));
  }

  int order() const { return static_cast<int>(c.size()) - 1; }
  const T& operator[](std::size_t i) const { return c[i]; }
  T& operator[](std::size_t i) { return c[i]; }

  bool all_zero() const {
    for (const auto& v : c)
      if (!coeff_is_zero(v)) return false;
    return true;
  }

  // Index of the first nonzero coefficient; order()+1 if all vanish within
  // the truncation (exact coefficient rings only).
  int valuation() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!coeff_is_zero(c[i])) return static_cast<int>(i);
    return order() + 1;
  }

  Series truncated(int new_order) const {
    std::vector<T> r(c.begin(), c.begin() + std::min<std::size_t>(c.size(), new_order + 1));
    while (static_cast<int>(r.size()) < new_order + 1) r.push_back(zero_like(c[0]));
    return Series(std::move(r));
  }

  T eval(const T& x) const {
    T acc = zero_like(x);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
};

template <class T>
bool operator==(const Series<T>& a, const Series<T>& b) {
  return a.c == b.c;
}

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
  std::size_t n = std::min(a.c.size(), b.c.size());
  std::vector<T> r(n, zero_like(a.c[0]));
  for (std::size_t i = 0; i < n; ++i) r[i] = a.c[i] + b.c[i];
  return Series<T>(std::move(r));
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
  std::size_t n = std::min(a.c.size(), b.c.size());
  std::vector<T> r(n, zero_like(a.c[0]));
  for (std::size_t i = 0; i < n; ++i) r[i] = a.c[i] - b.c[i];
  return Series<T>(std::move(r));
}

template <class T>
Series<T> operator-(const Series<T>& a) {
  std::vector<T> r = a.c;
  for (auto& v : r) v = zero_like(v) - v;
  return Series<T>(std::move(r));
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  std::size_t n = std::min(a.c.size(), b.c.size());
  std::vector<T> r(n, zero_like(a.c[0]));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeff_is_zero(a.c[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return Series<T>(std::move(r));
}

template <class T, class S>
Series<T> scale(const Series<T>& a, const S& s) {
  std::vector<T> r = a.c;
  for (auto& v : r) v = v * s;
  return Series<T>(std::move(r));
}

// a(inner(U)); inner must have zero constant term.
template <class T>
Series<T> compose(const Series<T>& a, const Series<T>& inner) {
  if (!coeff_is_zero(inner.c[0]))
    throw std::invalid_argument("series compose: inner constant term must be 0");
  int n = std::min(a.order(), inner.order());
  Series<T> acc = Series<T>::constant(zero_like(a.c[0]), n);
  Series<T> in = inner.truncated(n);
  for (std::size_t i = std::min(a.c.size(), static_cast<std::size_t>(n) + 1); i-- > 0;) {
    acc = acc * in;
    acc.c[0] += a.c[i];
  }
  return acc;
}

// 1/a for unit a (nonzero constant term).
template <class T>
Series<T> reciprocal(const Series<T>& a) {
  if (coeff_is_zero(a.c[0])) throw NotAUnit("series reciprocal: constant term is 0");
  std::vector<T> r(a.c.size(), zero_like(a.c[0]));
  T inv0 = inverse_coeff(a.c[0]);
  r[0] = inv0;
  for (std::size_t k = 1; k < a.c.size(); ++k) {
    T acc = zero_like(a.c[0]);
    for (std::size_t j = 1; j <= k; ++j) acc += a.c[j] * r[k - j];
    r[k] = zero_like(acc) - acc * inv0;
  }
  return Series<T>(std::move(r));
}

using RatSeries = Series<Rat>;
using NFSeries = Series<NFElem>;
using CSeries = Series<Complex>;

inline CSeries to_complex_series(const NFSeries& s, unsigned bits) {
  std::vector<Complex> r;
  r.reserve(s.c.size());
  for (const auto& v : s.c) r.emplace_back(v.to_real(bits));
  return CSeries(std::move(r));
}

}  // namespace betagerm
