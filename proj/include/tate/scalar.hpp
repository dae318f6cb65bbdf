#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/rational.hpp"

namespace tate {

// Coefficient ring descriptor. The base field is always Q; `pi` adjoins
// pi^{1/2} and its inverse, `t` adjoins a formal unit t^{±1}, and `eps`
// is the truncation order of one nilpotent generator (eps = 1 means none,
// so the plain rationals are Ring{}).
struct Ring {
  bool pi = false;
  bool t = false;
  int eps = 1;

  friend bool operator==(const Ring&, const Ring&) = default;

  // Partial order used for promotions: every monomial legal here must be
  // legal in `bigger`.
  bool containedIn(const Ring& bigger) const {
    return (!pi || bigger.pi) && (!t || bigger.t) && eps <= bigger.eps;
  }
  std::string str() const;
};

inline Ring ringQ() { return {}; }
inline Ring ringQPi() { return {.pi = true, .t = false, .eps = 1}; }
inline Ring ringNil(int order, bool withPi = false) {
  return {.pi = withPi, .t = false, .eps = order};
}
inline Ring ringT() { return {.pi = false, .t = true, .eps = 1}; }

// One multiplicative generator monomial pi^{pi2/2} * eps^eps * t^{tp}.
// pi exponents are stored doubled so half-integer powers stay integral.
struct Mono {
  int pi2 = 0;
  int eps = 0;
  int tp = 0;
  auto operator<=>(const Mono&) const = default;
};

// Exact element of the ring selected by its descriptor: a finite sum of
// rational multiples of generator monomials, kept sorted with no zero
// coefficients. Values are immutable after construction; all operations
// are pure.
class Scalar {
 public:
  using Term = std::pair<Mono, Rat>;

  explicit Scalar(Ring r) : ring_(r) {}
  Scalar(Ring r, const Rat& c);
  Scalar(Ring r, long n) : Scalar(r, Rat(n)) {}
  static Scalar monomial(Ring r, Mono m, const Rat& c);
  static Scalar fromTerms(Ring r, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  // Unit test in the full ring: the eps-degree-0 part must be a unit of the
  // Laurent ring Q[pi^{±1/2}, t^{±1}], i.e. a single nonzero monomial.
  bool isUnit() const;
  // Nilpotent iff the eps-degree-0 part vanishes (zero counts).
  bool isNilpotent() const;

  // The plain rational part (coefficient of the trivial monomial).
  Rat rationalPart() const;
  // Terms of eps-degree exactly j, eps factor kept in place.
  Scalar epsSlice(int j) const;
  // Least eps-degree among the terms; the eps order for the zero scalar.
  int minEpsGrade() const;
  // Terms of eps-degree 0.
  Scalar epsZero() const { return epsSlice(0); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

  Scalar mulRat(const Rat& c) const;
  // Appends the term products of a * b to buf without normalizing; pair with
  // fromTerms to accumulate many products with one final merge.
  static void mulInto(const Scalar& a, const Scalar& b, std::vector<Term>& buf);
  // Multiplicative inverse; Err::NotAUnit when isUnit() fails.
  Scalar inverse() const;
  Scalar pow(long k) const;
  // Square root of a unit when representable: the leading Laurent monomial
  // needs even pi/t exponents and a perfect-square rational coefficient;
  // the nilpotent remainder is handled by the terminating binomial series.
  std::optional<Scalar> sqrtUnit() const;

  // Reinterpret in a larger ring (Err::RingMismatch if not containing).
  Scalar promote(Ring target) const;
  // Substitute a rational for t (drops the t generator from the ring).
  Scalar evalT(const Rat& value) const;

 private:
  void normalize();
  void checkRing(const Scalar& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

// Gamma(1 + s) for half-integral s (s stored doubled), exact in Q[pi^{1/2}]:
// rational at integer arguments, a rational multiple of pi^{1/2} at
// half-odd arguments, via the recursion Gamma(t+1) = t Gamma(t) anchored at
// Gamma(1) = 1 and Gamma(1/2) = pi^{1/2}. Err::GammaPole at non-positive
// integer arguments of Gamma.
Scalar gammaHalf(int s2);

// (m)!! for odd m >= -1, with (-1)!! = 1. Err::DomainError otherwise.
Rat doubleFactorial(long m);

}  // namespace tate
