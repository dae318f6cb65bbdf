#pragma once

#include <cstdint>
#include <vector>

#include "tate/kernels.hpp"
#include "tate/scalar.hpp"

namespace tate {

using Exp = kernels::Exp;  // doubled exponent: x^{d/2} stored at key d

// Sentinel for "known to every order" (exact polynomials, monomials).
inline constexpr Exp kInfHi = Exp(1) << 58;
inline bool isInfExp(Exp e) { return e >= kInfHi; }
inline Exp satAdd(Exp a, Exp b) {
  if (isInfExp(a) || isInfExp(b)) return kInfHi;
  return a + b;
}

// Guaranteed-correct exponent range, endpoints doubled. The lower bound is
// also a support bound: the represented series has no terms below lo, while
// coefficients above hi are unknown (truncated away), not zero.
struct Window {
  Exp lo = 0;
  Exp hi = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

// Truncated formal series with exponents in (1/2)Z over a Scalar ring.
// Immutable; operations are pure functions returning fresh values and
// propagate windows conservatively -- they never silently extrapolate.
class Series {
 public:
  using Term = kernels::Term;

  Series(Ring r, Window w);
  // Builder used by operations: terms above w.hi are discarded as unknown;
  // a term below w.lo indicates a window-derivation bug and throws.
  static Series make(Ring r, Window w, std::vector<Term> terms);
  // Builder used by parsers/tests: every term must lie inside the window.
  static Series fromTermsChecked(Ring r, Window w, std::vector<Term> terms);
  static Series zero(Ring r, Window w) { return Series(r, w); }
  static Series monomial(Ring r, Exp e, const Scalar& c);
  static Series monomial(Ring r, Exp e, const Scalar& c, Window w);

  const Ring& ring() const { return ring_; }
  const Window& window() const { return win_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool isZeroOnWindow() const { return terms_.empty(); }
  const Scalar* find(Exp e) const;
  Scalar coeffOr0(Exp e) const;
  // Least exponent that can carry a nonzero coefficient: the least stored
  // key, or hi + 1 when the window holds only zeros.
  Exp supportFloor() const;
  Exp maxStored() const;

  bool operator==(const Series& o) const {
    return ring_ == o.ring_ && win_ == o.win_ && terms_ == o.terms_;
  }

 private:
  Ring ring_;
  Window win_;
  std::vector<Term> terms_;
};

// --- arithmetic (spec window rules) ---
Series add(const Series& f, const Series& g);  // window: intersection
Series sub(const Series& f, const Series& g);
Series neg(const Series& f);
Series scalarMul(const Scalar& c, const Series& f);
Series mulRat(const Rat& c, const Series& f);
// window: [f.lo+g.lo, min(f.lo+g.hi, f.hi+g.lo)]
Series mul(const Series& f, const Series& g);

Series derivative(const Series& f);   // d/dx; window drops by one x-unit
Series derivativeY(const Series& f);  // d/dy with y = sqrt(x)
Scalar residue(const Series& f);      // coefficient of x^{-1}; requires -1 in window
Scalar residueY(const Series& f);     // coefficient of y^{-1}
Series projectGeq(const Series& f, Exp m);  // zero everything below m; lo := m

// Substitution f(g) for g = x*(unit + nilpotent lower + higher), exact on a
// conservatively derived window. `compose` works on the integer-exponent
// lattice in x; `composeOdd` substitutes in the y = sqrt(x) variable.
Series compose(const Series& f, const Series& g);
Series composeOdd(const Series& f, const Series& g);
// Two-sided compositional inverse (degree-ordered solve on the nilpotent-free
// layer, then linear lifting through the nilpotent filtration).
Series reversion(const Series& g);
Series reversionOdd(const Series& g);
// Multiplicative inverse; needs the lowest non-nilpotent coefficient to be a
// unit (Err::NotInvertible otherwise).
Series mulInverse(const Series& f);
// Odd square root h(y) with h(y)^2 = g(y^2); leading coefficient must have a
// representable square root (Err::LeadingNotASquare).
Series sqrtOdd(const Series& g);

Series shift(const Series& f, Exp delta);  // multiply by x^{delta/2}
Series promote(const Series& f, Ring target);
// Coefficientwise equality on [w.lo, w.hi]; requires w.hi to be known to both.
bool equalOnWindow(const Series& a, const Series& b, Window w);

namespace detail {
// Sharper internal variants: the add keeps every coefficient known under the
// support-bound reading of windows, the mul uses actual support floors. The
// public entry points above keep the documented window rules.
Series addSharp(const Series& f, const Series& g);
Series mulSharp(const Series& f, const Series& g);
// (1 + w)^alpha for w with no constant term and nilpotent coefficients in
// negative degrees; the binomial-multinomial sum truncates by nilpotency
// below and by the window above.
Series onePlusPow(const Series& w, const Rat& alpha);
Series composeStep(const Series& f, const Series& g, Exp step);
Series reversionStep(const Series& g, Exp step);
}  // namespace detail

}  // namespace tate
