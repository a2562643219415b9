#include "betagerm/beta_dynamics.hpp"

#include <climits>
#include <unordered_map>

namespace betagerm {

namespace {

// Cheap structural hash of the canonical coordinates; equality is exact.
std::uint64_t state_hash(const std::vector<Rat>& a) {
  const Int p("2305843009213693951");  // 2^61 - 1
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& q : a) {
    std::uint64_t n = static_cast<std::uint64_t>(Int(numerator(q) % p));
    std::uint64_t d = static_cast<std::uint64_t>(Int(denominator(q) % p));
    h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= d + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Int BetaExpansion::digit(long j) const {
  if (j < 1) throw std::out_of_range("digit index is 1-based");
  if (j <= static_cast<long>(digits.size())) return digits[j - 1];
  switch (kind) {
    case ExpansionKind::Simple:
      return 0;  // finite expansion ends in zeros
    case ExpansionKind::EventuallyPeriodic: {
      long r = (j - m - 1) % period;
      return digits[m + r];
    }
    default:
      throw InsufficientDigits("unresolved expansion has only " +
                               std::to_string(digits.size()) + " digits");
  }
}

long BetaExpansion::available_digits() const {
  return is_parry() ? LONG_MAX : static_cast<long>(digits.size());
}

int BetaExpansion::parry_degree() const {
  if (!is_parry()) throw NotParryResolved("parry_degree on unresolved expansion");
  return is_simple() ? m : m + period;
}

std::string BetaExpansion::describe() const {
  switch (kind) {
    case ExpansionKind::Simple:
      return "Simple(" + std::to_string(m) + ")";
    case ExpansionKind::EventuallyPeriodic:
      return "EventuallyPeriodic(" + std::to_string(m) + "," + std::to_string(period) + ")";
    default:
      return "UnresolvedWithin(" + std::to_string(bound) + ")";
  }
}

BetaExpansion greedy_expansion(const AlgebraicNumber& beta, long max_iter) {
  return greedy_expansion(NumberField::make(beta), max_iter);
}

BetaExpansion greedy_expansion(const std::shared_ptr<const NumberField>& K, long max_iter) {
  BetaExpansion e;
  e.K = K;
  e.bound = max_iter;
  NFElem beta = NFElem::generator(K);
  NFElem x = NFElem::from_rat(K, 1);
  e.orbit.push_back(x);

  // state coordinates -> orbit index (n >= 1); x_0 = 1 never recurs since
  // every later state lies in [0,1).
  std::unordered_map<std::uint64_t, std::vector<long>> seen;
  for (long n = 1; n <= max_iter; ++n) {
    NFElem y = beta * x;
    Int t = y.floor();
    x = y - NFElem::from_rat(K, Rat(t));
    e.digits.push_back(t);
    e.orbit.push_back(x);
    if (x.is_zero()) {
      e.kind = ExpansionKind::Simple;
      e.m = static_cast<int>(n);
      return e;
    }
    std::uint64_t h = state_hash(x.coords());
    auto& bucket = seen[h];
    for (long idx : bucket) {
      if (e.orbit[static_cast<std::size_t>(idx)] == x) {
        e.kind = ExpansionKind::EventuallyPeriodic;
        e.m = static_cast<int>(idx);
        e.period = static_cast<int>(n - idx);
        return e;
      }
    }
    bucket.push_back(n);
  }
  e.kind = ExpansionKind::Unresolved;
  return e;
}

ExpansionKind classify(const BetaExpansion& e) {
  const Int beta_floor = e.K->beta.floor();
  if (!e.digits.empty() && e.digits[0] != beta_floor)
    throw std::logic_error("classify: t_1 != floor(beta)");
  for (const auto& t : e.digits)
    if (t < 0 || t > beta_floor) throw std::logic_error("classify: digit outside alphabet");
  switch (e.kind) {
    case ExpansionKind::Simple: {
      if (e.m < 1 || static_cast<long>(e.digits.size()) != e.m || e.digits.back() < 1)
        throw std::logic_error("classify: inconsistent Simple expansion");
      if (!e.orbit.back().is_zero())
        throw std::logic_error("classify: Simple expansion with nonzero final state");
      break;
    }
    case ExpansionKind::EventuallyPeriodic: {
      if (e.period < 1 || e.m < 0 ||
          static_cast<long>(e.digits.size()) != e.m + e.period)
        throw std::logic_error("classify: inconsistent periodic expansion");
      if (!(e.orbit[static_cast<std::size_t>(e.m)] == e.orbit.back()))
        throw std::logic_error("classify: cycle closure does not hold");
      break;
    }
    default:
      break;
  }
  return e.kind;
}

Real ParryUpperTruncation::tail_bound(const Real& abs_z) const {
  if (!(abs_z < 1)) return Real(-1);  // bound invalid outside |z| < 1
  return Real(digit_bound) * pow(abs_z, order + 1) / (1 - abs_z);
}

Complex ParryUpperTruncation::eval(const Complex& z) const {
  Complex acc(Real(0));
  for (std::size_t i = poly.c.size(); i-- > 0;) acc = acc * z + Complex(Real(poly.c[i]));
  return acc;
}

ParryUpperTruncation parry_upper_truncation(const BetaExpansion& e, int order) {
  if (order < 1) throw std::invalid_argument("parry_upper_truncation: order must be >= 1");
  if (!e.is_parry() && order > static_cast<int>(e.digits.size()))
    throw InsufficientDigits("expansion unresolved and truncation order exceeds digits");
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  c[0] = -1;
  for (long j = 1; j <= order; ++j) c[static_cast<std::size_t>(j)] = e.digit(j);
  ParryUpperTruncation t;
  t.poly = IntPoly(std::move(c));
  t.order = order;
  // ceil(beta - 1) = floor(beta) for non-integer beta; for integer beta the
  // expansion is 0.beta and the tail is empty, so floor(beta) is still a bound.
  t.digit_bound = e.K->beta.floor();
  return t;
}

}  // namespace betagerm
