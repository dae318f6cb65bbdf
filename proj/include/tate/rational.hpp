#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "tate/errors.hpp"

namespace tate {

// Exact rational number. Wraps a GMP mpq kept in canonical form
// (gcd(num, den) = 1, den > 0), so equality is structural.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, literals read naturally
  Rat(long n, long d) {
    require(d != 0, Err::DomainError, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  bool isNegative() const { return sgn(v_) < 0; }
  bool isInteger() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    require(!o.isZero(), Err::NotAUnit, "division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }

  Rat inverse() const {
    require(!isZero(), Err::NotAUnit, "inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    mpq_class r(1), b(v_);
    for (long i = 0; i < k; ++i) r *= b;
    return Rat(r);
  }

  // Exact square root when one exists in Q (nonnegative, num and den both
  // perfect squares); the nonnegative root is returned.
  std::optional<Rat> sqrt() const {
    if (isNegative()) return std::nullopt;
    const mpz_class num = v_.get_num(), den = v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(mpq_class(rn, rd));
  }

  static Rat factorial(long n) {
    require(n >= 0, Err::DomainError, "factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(f));
  }

  // Generalized binomial coefficient C(a, l) = a(a-1)...(a-l+1)/l!.
  static Rat binomial(const Rat& a, long l) {
    require(l >= 0, Err::DomainError, "binomial with negative lower index");
    Rat r = 1;
    for (long i = 0; i < l; ++i) r *= (a - Rat(i));
    return r / factorial(l);
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace tate
