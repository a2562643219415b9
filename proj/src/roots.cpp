#include "betagerm/roots.hpp"

#include <algorithm>
#include <utility>

namespace betagerm {

namespace {

Complex eval_c(const std::vector<Complex>& c, const Complex& z) {
  Complex acc(Real(0));
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::vector<Complex> derivative_c(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Complex(Real(static_cast<long>(i))));
  return d;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, unsigned work_bits,
                                  std::vector<Real>* radii) {
  ScopedPrecision prec(work_bits);
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> z(n);
  if (n <= 0) return z;

  // Cauchy bound on root moduli for the starting circle.
  Real bound = 0;
  Real lead = abs(coeffs.back());
  for (int i = 0; i < n; ++i) {
    Real q = abs(coeffs[i]) / lead;
    if (q > bound) bound = q;
  }
  bound += 1;
  for (int k = 0; k < n; ++k) {
    // Fixed angular offset breaks symmetry against real-axis root patterns.
    Complex w = unit_root(4 * k + 1, 4 * n) * Complex(unit_root(1, 17));
    z[k] = w * Complex(bound * Real(0.75));
  }

  auto deriv = derivative_c(coeffs);
  Real eps = pow(Real(2), -static_cast<long>(work_bits - 8));
  int max_iters = 60 + 12 * n;
  for (int it = 0; it < max_iters; ++it) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex pv = eval_c(coeffs, z[k]);
      Complex dv = eval_c(deriv, z[k]);
      if (norm(dv) == 0) {
        z[k] += Complex(Real(1) / Real(1 + k + it), Real(1) / Real(3 + k));
        worst = 1;
        continue;
      }
      Complex w = pv / dv;  // Newton correction
      Complex s(Real(0));
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(Real(1)) / (z[k] - z[j]);
      Complex denom = Complex(Real(1)) - w * s;
      Complex step = (norm(denom) == 0) ? w : w / denom;
      z[k] -= step;
      Real m = abs(step);
      if (m > worst) worst = m;
    }
    if (worst < eps) break;
  }

  if (radii) {
    radii->assign(n, Real(0));
    for (int k = 0; k < n; ++k) {
      Real prod = lead;
      for (int j = 0; j < n; ++j)
        if (j != k) prod *= abs(z[k] - z[j]);
      (*radii)[k] = prod == 0 ? Real(1) : Real(n) * abs(eval_c(coeffs, z[k])) / prod;
    }
  }
  return z;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  RatPoly b = to_rat(p);
  RatPoly g = gcd_poly(b, derivative(b));
  if (g.degree() <= 0) {
    out.emplace_back(primitive_part(b), 1);
    return out;
  }
  RatPoly w = divmod(b, g).first;
  RatPoly y = divmod(derivative(b), g).first;
  RatPoly zp = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    RatPoly ai = gcd_poly(w, zp);
    if (ai.degree() > 0) out.emplace_back(primitive_part(ai), i);
    w = divmod(w, ai).first;
    y = divmod(zp, ai).first;
    zp = y - derivative(w);
    ++i;
  }
  return out;
}

namespace {

// Roots of a squarefree primitive integer polynomial, certified to `bits`.
std::vector<RootBall> roots_squarefree(const IntPoly& p, unsigned bits) {
  const int n = p.degree();
  std::vector<RootBall> balls(n);
  Real target;
  for (unsigned work = std::max(2 * bits + 64, kDefaultBits);; work *= 2) {
    if (work > max_bits_ceiling())
      throw PrecisionExhausted("poly_roots: certification failed at precision ceiling");
    ScopedPrecision prec(work);
    target = pow(Real(2), -static_cast<long>(bits));
    std::vector<Complex> coeffs(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) coeffs[i] = Complex(Real(p.c[i]));
    std::vector<Real> radii;
    std::vector<Complex> z = aberth_roots(coeffs, work, &radii);
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      if (!(radii[k] <= target)) ok = false;
      for (int j = k + 1; j < n && ok; ++j)
        if (!(abs(z[k] - z[j]) > radii[k] + radii[j])) ok = false;
    }
    if (!ok) continue;
    for (int k = 0; k < n; ++k) balls[k] = RootBall{z[k], radii[k], 1};
    break;
  }
  // Deterministic order: by real part, then imaginary part.
  std::sort(balls.begin(), balls.end(), [](const RootBall& a, const RootBall& b) {
    if (a.center.re != b.center.re) return a.center.re < b.center.re;
    return a.center.im < b.center.im;
  });
  return balls;
}

}  // namespace

std::vector<RootBall> poly_roots(const IntPoly& p, unsigned bits) {
  if (p.degree() < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");
  std::vector<RootBall> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (factor.degree() < 1) continue;
    for (auto& ball : roots_squarefree(factor, bits)) {
      ball.multiplicity = mult;
      out.push_back(ball);
    }
  }
  return out;
}

std::vector<RootBall> poly_roots(const RatPoly& p, unsigned bits) {
  return poly_roots(primitive_part(p), bits);
}

}  // namespace betagerm
