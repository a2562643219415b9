#include "betagerm/algebraic.hpp"

#include "betagerm/factorq.hpp"

namespace betagerm {

namespace {

IntPoly normalize_minpoly(IntPoly p) {
  if (p.degree() < 1) throw InvalidAlgebraicNumber("minimal polynomial must have degree >= 1");
  IntPoly q = primitive_part(to_rat(p));
  if (!is_irreducible_q(q))
    throw InvalidAlgebraicNumber("minimal polynomial must be irreducible over Q");
  return q;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(IntPoly min_poly, std::optional<std::pair<Rat, Rat>> interval)
    : minpoly_(normalize_minpoly(std::move(min_poly))), state_(std::make_shared<State>()) {
  if (degree() == 1) {
    Rat r = -Rat(minpoly_.c[0]) / Rat(minpoly_.c[1]);
    if (!(r > 1)) throw NotGreaterThanOne("the number is <= 1");
    if (interval && !(interval->first < r && r <= interval->second))
      throw InvalidAlgebraicNumber("interval does not contain the rational root");
    state_->lo = state_->hi = r;
    return;
  }
  Rat lo, hi;
  auto seq = sturm_sequence(to_rat(minpoly_));
  if (interval) {
    lo = interval->first;
    hi = interval->second;
    if (!(lo < hi)) throw InvalidAlgebraicNumber("empty isolating interval");
    if (count_roots(seq, lo, hi) != 1)
      throw InvalidAlgebraicNumber("interval does not isolate exactly one root");
  } else {
    Rat bound = root_bound(minpoly_);
    auto roots = isolate_real_roots(minpoly_, Rat(1), bound);
    if (roots.empty()) throw NotGreaterThanOne("no real root > 1");
    lo = roots.back().first;
    hi = roots.back().second;
  }
  // Shrink until the whole interval sits above 1 (the root itself must be > 1).
  while (!(lo > 1)) {
    if (!(hi > 1)) throw NotGreaterThanOne("isolated root is <= 1");
    Rat mid = (lo + hi) / 2;
    while (sign_at(seq[0], mid) == 0) mid = (mid + hi) / 2;
    if (count_roots(seq, mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  state_->lo = lo;
  state_->hi = hi;
}

Rat AlgebraicNumber::rational_value() const {
  if (degree() != 1) throw std::logic_error("rational_value: degree != 1");
  return state_->lo;
}

std::pair<Rat, Rat> AlgebraicNumber::refine(unsigned bits) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (degree() == 1) return {state_->lo, state_->hi};
  Rat width_target = pow_rat(Rat(1, 2), static_cast<long>(bits));
  Rat& lo = state_->lo;
  Rat& hi = state_->hi;
  if (hi - lo <= width_target) return {lo, hi};
  RatPoly p = to_rat(minpoly_);
  int sign_lo = sign_at(p, lo);
  while (hi - lo > width_target) {
    Rat mid = (lo + hi) / 2;
    int s = sign_at(p, mid);
    // s == 0 impossible: irreducible of degree >= 2 has no rational root.
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Real AlgebraicNumber::to_real(unsigned bits) const {
  auto [lo, hi] = refine(bits);
  ScopedPrecision prec(bits + 16);
  return (betagerm::to_real(lo) + betagerm::to_real(hi)) / 2;
}

Int AlgebraicNumber::floor() const {
  if (degree() == 1) return floor_rat(state_->lo);
  unsigned bits = 8;
  for (;;) {
    auto [lo, hi] = refine(bits);
    Int fl = floor_rat(lo), fh = floor_rat(hi);
    if (fl == fh) return fl;
    // An irrational number eventually separates from every integer.
    bits *= 2;
    if (bits > max_bits_ceiling())
      throw PrecisionExhausted("floor: could not separate from an integer");
  }
}

AlgebraicNumber AlgebraicNumber::shifted(const Rat& delta) const {
  RatPoly shifted_poly = shift(to_rat(minpoly_), -delta);
  if (degree() == 1) {
    Rat r = state_->lo + delta;
    return AlgebraicNumber(primitive_part(shifted_poly), std::pair<Rat, Rat>(r - 1, r));
  }
  std::pair<Rat, Rat> cur;
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    cur = {state_->lo, state_->hi};
  }
  return AlgebraicNumber(primitive_part(shifted_poly),
                         std::pair<Rat, Rat>(cur.first + delta, cur.second + delta));
}

bool AlgebraicNumber::same_number(const AlgebraicNumber& other) const {
  if (!(minpoly_ == other.minpoly_)) return false;
  auto [a, b] = refine(64);
  auto [c, d] = other.refine(64);
  return !(b < c || d < a);
}

}  // namespace betagerm
