#include "betagerm/numberfield.hpp"

#include <algorithm>

namespace betagerm {

std::shared_ptr<const NumberField> NumberField::make(AlgebraicNumber beta_in) {
  NumberField nf{std::move(beta_in), 0, {}};
  nf.d = nf.beta.min_poly().degree();
  const IntPoly& p = nf.beta.min_poly();
  nf.xd_red.resize(nf.d);
  for (int i = 0; i < nf.d; ++i) nf.xd_red[i] = -Rat(p.c[i]) / Rat(p.lead());
  return std::make_shared<const NumberField>(std::move(nf));
}

NFElem::NFElem(std::shared_ptr<const NumberField> field, std::vector<Rat> coords)
    : K_(std::move(field)), a_(std::move(coords)) {
  const int d = K_->d;
  // Reduce any coordinates at or above degree d through beta^d = xd_red.
  while (static_cast<int>(a_.size()) > d) {
    Rat top = a_.back();
    a_.pop_back();
    std::size_t k = a_.size() - d;  // top multiplies beta^{d+k}
    for (int i = 0; i < d; ++i) a_[k + i] += top * K_->xd_red[i];
  }
  a_.resize(d, Rat(0));
}

NFElem NFElem::from_rat(const std::shared_ptr<const NumberField>& field, const Rat& r) {
  std::vector<Rat> v(field->d, Rat(0));
  v[0] = r;
  return NFElem(field, std::move(v));
}

NFElem NFElem::generator(const std::shared_ptr<const NumberField>& field) {
  std::vector<Rat> v(field->d, Rat(0));
  if (field->d == 1)
    v[0] = field->beta.rational_value();
  else
    v[1] = 1;
  return NFElem(field, std::move(v));
}

bool NFElem::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (a_[i] != 0) return false;
  return true;
}

NFElem NFElem::operator-() const {
  std::vector<Rat> v = a_;
  for (auto& x : v) x = -x;
  return NFElem(K_, std::move(v));
}

NFElem& NFElem::operator+=(const NFElem& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  const int d = K_->d;
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a_[i] * o.a_[j];
  }
  *this = NFElem(K_, std::move(prod));
  return *this;
}

NFElem& NFElem::operator*=(const Rat& r) {
  for (auto& x : a_) x *= r;
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("NFElem::inverse of zero");
  if (is_rational()) return from_rat(K_, Rat(1) / a_[0]);
  // s * a + t * minpoly = 1 over Q[X].
  RatPoly a{std::vector<Rat>(a_)};
  RatPoly m = to_rat(K_->beta.min_poly());
  RatPoly r0 = m, r1 = a, s0(std::vector<Rat>{}), s1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant: gcd = 1 (minpoly irreducible, deg a < deg m).
  Rat g = r1.c[0];
  std::vector<Rat> inv(s1.c);
  for (auto& x : inv) x /= g;
  return NFElem(K_, std::move(inv));
}

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem acc = from_rat(K_, 1);
  NFElem base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::pair<Rat, Rat> NFElem::interval(unsigned bits) const {
  auto [bl, bh] = K_->beta.refine(bits);
  // Powers of beta are positive increasing (beta > 1).
  Rat vl = 0, vh = 0;
  Rat pl = 1, ph = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] > 0) {
      vl += a_[i] * pl;
      vh += a_[i] * ph;
    } else if (a_[i] < 0) {
      vl += a_[i] * ph;
      vh += a_[i] * pl;
    }
    pl *= bl;
    ph *= bh;
  }
  return {vl, vh};
}

Real NFElem::to_real(unsigned bits) const {
  auto [lo, hi] = interval(bits);
  ScopedPrecision prec(bits + 16);
  return (betagerm::to_real(lo) + betagerm::to_real(hi)) / 2;
}

Int NFElem::floor() const {
  if (is_rational()) return floor_rat(a_[0]);
  // Irrational value: interval refinement separates it from every integer.
  for (unsigned bits = 32; bits <= max_bits_ceiling(); bits *= 2) {
    auto [lo, hi] = interval(bits);
    Int fl = floor_rat(lo), fh = floor_rat(hi);
    if (fl == fh) return fl;
  }
  throw PrecisionExhausted("nf_floor: failed to separate from an integer");
}

int NFElem::sign() const {
  if (is_rational()) return a_[0] == 0 ? 0 : (a_[0] > 0 ? 1 : -1);
  for (unsigned bits = 32; bits <= max_bits_ceiling(); bits *= 2) {
    auto [lo, hi] = interval(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw PrecisionExhausted("NFElem::sign: failed to separate from zero");
}

// ---------------------------------------------------------------------------
// NFPoly
// ---------------------------------------------------------------------------

NFPoly::NFPoly(std::shared_ptr<const NumberField> field, std::vector<NFElem> coeffs)
    : K(std::move(field)), c(std::move(coeffs)) {
  trim();
}

void NFPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

NFElem NFPoly::eval(const NFElem& x) const {
  NFElem acc = NFElem::from_rat(K, 0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

NFPoly nf_poly_from_rat(const std::shared_ptr<const NumberField>& K, const RatPoly& p) {
  std::vector<NFElem> v;
  v.reserve(p.c.size());
  for (const auto& q : p.c) v.push_back(NFElem::from_rat(K, q));
  return NFPoly(K, std::move(v));
}

NFPoly operator+(const NFPoly& a, const NFPoly& b) {
  const auto& K = a.K ? a.K : b.K;
  std::vector<NFElem> r;
  std::size_t n = std::max(a.c.size(), b.c.size());
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    NFElem v = NFElem::from_rat(K, 0);
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v += b.c[i];
    r.push_back(std::move(v));
  }
  return NFPoly(K, std::move(r));
}

NFPoly operator-(const NFPoly& a, const NFPoly& b) {
  const auto& K = a.K ? a.K : b.K;
  std::vector<NFElem> r;
  std::size_t n = std::max(a.c.size(), b.c.size());
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    NFElem v = NFElem::from_rat(K, 0);
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v -= b.c[i];
    r.push_back(std::move(v));
  }
  return NFPoly(K, std::move(r));
}

NFPoly operator*(const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() || b.is_zero()) return NFPoly(a.K ? a.K : b.K, {});
  std::vector<NFElem> r(a.c.size() + b.c.size() - 1, NFElem::from_rat(a.K, 0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return NFPoly(a.K, std::move(r));
}

NFPoly operator*(const NFPoly& a, const NFElem& s) {
  std::vector<NFElem> r = a.c;
  for (auto& v : r) v *= s;
  return NFPoly(a.K, std::move(r));
}

std::pair<NFPoly, NFPoly> divmod(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("NFPoly divmod: zero divisor");
  NFPoly r = a;
  NFElem lead_inv = b.lead().inverse();
  std::vector<NFElem> q(a.c.size(), NFElem::from_rat(a.K, 0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    NFElem f = r.lead() * lead_inv;
    q[k] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + k] -= f * b.c[i];
    r.trim();
  }
  return {NFPoly(a.K, std::move(q)), r};
}

NFPoly xgcd(const NFPoly& a, const NFPoly& b, NFPoly& s, NFPoly& t) {
  const auto& K = a.K ? a.K : b.K;
  NFPoly r0 = a, r1 = b;
  NFPoly s0(K, {NFElem::from_rat(K, 1)}), s1(K, {});
  NFPoly t0(K, {}), t1(K, {NFElem::from_rat(K, 1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    NFPoly s2 = s0 - q * s1;
    NFPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    NFElem inv = r0.lead().inverse();
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  s = std::move(s0);
  t = std::move(t0);
  return r0;
}

}  // namespace betagerm
