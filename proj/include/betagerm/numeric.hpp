// Arithmetic substrate: exact integers/rationals (GMP) and variable-precision
// reals (MPFR), plus a small complex type built on the latter.
//
// Precision convention: the public API talks in *bits*; MPFR precision is set
// through ScopedPrecision. Default working precision is 256 bits, escalating
// x2 up to a ceiling (BETAGERM_MAX_BITS overrides, default 8192) before
// PrecisionExhausted is thrown.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace betagerm {

// Expression templates are disabled so the types behave as plain values in
// generic code (template argument deduction, auto, ternaries).
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};
struct NotAUnit : std::runtime_error {
  explicit NotAUnit(const std::string& what) : std::runtime_error(what) {}
};

constexpr unsigned kDefaultBits = 256;

inline unsigned max_bits_ceiling() {
  if (const char* env = std::getenv("BETAGERM_MAX_BITS")) {
    long v = std::atol(env);
    if (v >= 64) return static_cast<unsigned>(v);
  }
  return 8192;
}

inline unsigned digits10_for_bits(unsigned bits) {
  // bits * log10(2), rounded up, plus guard digits.
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Sets the thread-default MPFR precision for the lifetime of the guard.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;                       // truncates toward zero
  if (f * d > n) --f;
  return f;
}
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline Rat pow_rat(const Rat& base, long e) {
  Rat r = 1, b = base;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return inv ? Rat(1) / r : r;
}

inline Real to_real(const Rat& q) { return Real(numerator(q)) / Real(denominator(q)); }

// ---------------------------------------------------------------------------
// Complex numbers over Real. std::complex is not specified for user types,
// so the handful of operations needed here are spelled out.
// ---------------------------------------------------------------------------
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static Complex from_rat(const Rat& r) { return Complex(to_real(r)); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real n = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) {
  using boost::multiprecision::sqrt;
  return sqrt(norm(z));
}

// Principal square root; used for quadratic-formula style oracles in tests
// and for seeding branch computations.
inline Complex sqrt(const Complex& z) {
  using boost::multiprecision::sqrt;
  Real r = abs(z);
  if (r == 0) return Complex(Real(0));
  Real u = sqrt((r + z.re) / 2);
  if (u == 0) return {Real(0), sqrt(r)};
  return {u, z.im / (2 * u)};
}

// e^{i*2*pi*k/n}, computed at current default precision.
inline Complex unit_root(long k, long n) {
  Real pi = boost::math::constants::pi<Real>();
  Real t = 2 * pi * Real(k) / Real(n);
  return {cos(t), sin(t)};
}

}  // namespace betagerm
