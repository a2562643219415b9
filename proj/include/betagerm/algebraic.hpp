// Exact real algebraic numbers beta > 1: primitive irreducible minimal
// polynomial plus a rational isolating interval, refined on demand by
// bisection. Refinement is monotone (nested intervals) and cached; the cache
// is idempotent so concurrent refiners may duplicate work but never corrupt.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "betagerm/poly.hpp"

namespace betagerm {

struct NotGreaterThanOne : std::runtime_error {
  explicit NotGreaterThanOne(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidAlgebraicNumber : std::runtime_error {
  explicit InvalidAlgebraicNumber(const std::string& what) : std::runtime_error(what) {}
};

class AlgebraicNumber {
 public:
  // Constructs the real algebraic number > 1 with the given minimal
  // polynomial (any integer polynomial; it is normalized to primitive with
  // positive leading coefficient and must be irreducible over Q). Without an
  // interval, the largest real root > 1 is isolated; with one, the interval
  // must contain exactly one root, and that root must exceed 1.
  explicit AlgebraicNumber(IntPoly min_poly,
                           std::optional<std::pair<Rat, Rat>> interval = std::nullopt);

  const IntPoly& min_poly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rat rational_value() const;  // only for degree 1

  // Interval of width <= 2^-bits containing the root; deterministic, nested.
  std::pair<Rat, Rat> refine(unsigned bits) const;
  Real to_real(unsigned bits) const;
  Int floor() const;

  // The number beta + delta (exact rational shift), re-isolated.
  AlgebraicNumber shifted(const Rat& delta) const;

  bool same_number(const AlgebraicNumber& other) const;

 private:
  struct State {
    Rat lo, hi;
    std::mutex mu;
  };

  IntPoly minpoly_;
  std::shared_ptr<State> state_;  // shared refinement cache
};

}  // namespace betagerm
