#include "betagerm/poly.hpp"

namespace betagerm {

int sign_at(const RatPoly& p, const Rat& x) {
  Rat v = eval_poly(p, x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq;
  seq.push_back(p);
  seq.push_back(derivative(p));
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sturm_sign_changes(const std::vector<RatPoly>& seq, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s != 0) {
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  return changes;
}

int count_roots(const std::vector<RatPoly>& seq, const Rat& a, const Rat& b) {
  return sturm_sign_changes(seq, a) - sturm_sign_changes(seq, b);
}

Rat root_bound(const IntPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat q = Rat(abs(p.c[i])) / Rat(abs(p.lead()));
    if (q > m) m = q;
  }
  return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                    const Rat& hi) {
  auto seq = sturm_sequence(to_rat(p));
  std::vector<std::pair<Rat, Rat>> out;
  // Depth-first bisection of (lo, hi].
  std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count_roots(seq, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) / 2;
    // Nudge off a root of p so interval endpoints stay sign-definite.
    while (sign_at(seq[0], mid) == 0) mid = (a + mid) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

}  // namespace betagerm
