#include "betagerm/factorq.hpp"

#include <algorithm>
#include <optional>

#include "betagerm/roots.hpp"

namespace betagerm {

namespace {

// A real root or a complex-conjugate pair of the squarefree part; its monic
// real polynomial is degree 1 resp. 2.
struct Atom {
  std::vector<Real> poly;  // monic, low degree first
  int degree;
};

IntPoly round_to_int_poly(const std::vector<Real>& c, bool* ok) {
  std::vector<Int> r(c.size());
  *ok = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Real rounded = round(c[i]);
    if (abs(c[i] - rounded) > Real(0.25)) {
      *ok = false;
      return {};
    }
    r[i] = rounded.convert_to<Int>();
  }
  IntPoly p(std::move(r));
  return p;
}

std::vector<Real> mul_real(const std::vector<Real>& a, const std::vector<Real>& b) {
  std::vector<Real> r(a.size() + b.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

struct SubsetSearch {
  const std::vector<Atom>& atoms;
  const IntPoly& q;
  int target_degree;
  long budget = 500000;
  std::vector<int> chosen;
  std::optional<std::pair<IntPoly, std::vector<int>>> found;

  void run(std::size_t start, int degree_left, const std::vector<Real>& acc) {
    if (found || budget-- <= 0) return;
    if (degree_left == 0) {
      // Candidate: lead(q) * prod(chosen atoms), rounded, primitive part.
      std::vector<Real> scaled = acc;
      Real lead(q.lead());
      for (auto& v : scaled) v *= lead;
      bool ok = false;
      IntPoly cand = round_to_int_poly(scaled, &ok);
      if (!ok || cand.degree() < 1) return;
      cand = primitive_part(to_rat(cand));
      IntPoly quotient;
      if (divide_exact(q, cand, quotient)) found = {cand, chosen};
      return;
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].degree > degree_left) continue;
      chosen.push_back(static_cast<int>(i));
      run(i + 1, degree_left - atoms[i].degree, mul_real(acc, atoms[i].poly));
      chosen.pop_back();
      if (found) return;
    }
  }
};

// Factor a primitive squarefree integer polynomial.
std::vector<IntPoly> factor_squarefree(IntPoly q) {
  std::vector<IntPoly> out;
  while (q.degree() > 1) {
    const unsigned bits = 192 + 8 * static_cast<unsigned>(q.degree());
    ScopedPrecision prec(bits + 64);
    auto balls = poly_roots(q, bits);

    // Exact real-root count decides which numeric roots are real.
    Rat bound = root_bound(q);
    std::size_t nreal = isolate_real_roots(q, -bound, bound).size();
    std::vector<std::size_t> order(balls.size());
    for (std::size_t i = 0; i < balls.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return abs(balls[a].center.im) < abs(balls[b].center.im);
    });

    std::vector<Atom> atoms;
    std::vector<bool> used(balls.size(), false);
    for (std::size_t k = 0; k < nreal; ++k) {
      const auto& z = balls[order[k]].center;
      atoms.push_back(Atom{{-z.re, Real(1)}, 1});
      used[order[k]] = true;
    }
    // Remaining roots pair up by conjugation.
    for (std::size_t i = 0; i < balls.size(); ++i) {
      if (used[i] || !(balls[i].center.im > 0)) continue;
      std::size_t best = balls.size();
      Real best_d = 0;
      for (std::size_t j = 0; j < balls.size(); ++j) {
        if (used[j] || j == i || !(balls[j].center.im < 0)) continue;
        Real d = abs(balls[j].center - conj(balls[i].center));
        if (best == balls.size() || d < best_d) {
          best = j;
          best_d = d;
        }
      }
      if (best == balls.size()) break;  // inconsistent pairing; treated below
      used[i] = used[best] = true;
      const auto& z = balls[i].center;
      atoms.push_back(Atom{{norm(z), -2 * z.re, Real(1)}, 2});
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.poly[0] < b.poly[0];
    });

    std::optional<IntPoly> factor;
    for (int deg = 1; deg <= q.degree() / 2 && !factor; ++deg) {
      SubsetSearch search{atoms, q, deg, 500000, {}, {}};
      search.run(0, deg, {Real(1)});
      if (search.found) factor = search.found->first;
    }
    if (!factor) break;  // irreducible (no proper factor up to half degree)
    out.push_back(*factor);
    IntPoly quotient;
    divide_exact(q, *factor, quotient);
    if (quotient.lead() < 0) {
      for (auto& v : quotient.c) v = -v;
    }
    q = primitive_part(to_rat(quotient));
  }
  if (q.degree() >= 1) out.push_back(q);
  return out;
}

}  // namespace

IntPoly Factorization::expand() const {
  IntPoly acc(std::vector<Int>{content});
  for (const auto& [f, mult] : factors)
    for (int i = 0; i < mult; ++i) acc = acc * f;
  return acc;
}

Factorization poly_factor_q(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("poly_factor_q: degree must be >= 1");
  Factorization out;
  Int cont = content(p);
  if (p.lead() < 0) cont = -cont;
  out.content = cont;
  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    if (sf.degree() < 1) continue;
    for (auto& f : factor_squarefree(sf)) out.factors.emplace_back(std::move(f), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

}  // namespace betagerm
