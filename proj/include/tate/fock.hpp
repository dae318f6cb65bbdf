#pragma once

#include <map>
#include <vector>

#include "tate/scalar.hpp"

namespace tate {

// Bosonic Fock space on half-integer modes r in Z + 1/2 (stored doubled, so
// every mode key is odd). A basis monomial is the multiset of positive modes
// applied to the vacuum, kept as a sorted vector; vectors are finite rational
// combinations of monomials. alpha_r for r < 0 creates, r > 0 annihilates,
// with [alpha_r, alpha_s] = r delta_{r+s,0}.
using FockMonomial = std::vector<int>;  // sorted doubled positive modes

class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum() { return basis({}); }
  static FockVector basis(FockMonomial m);

  const std::map<FockMonomial, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  // doubled level: the sum of the doubled modes of a monomial
  int maxLevel2() const;

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector mulRat(const Rat& c) const;
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

  void add(const FockMonomial& m, const Rat& c);

 private:
  std::map<FockMonomial, Rat> terms_;
};

// All basis monomials with doubled level <= cap2, vacuum first, in map order.
std::vector<FockMonomial> fockBasis(int cap2);

// alpha_{r2/2} applied to v.
FockVector alphaApply(int r2, const FockVector& v);

// The zero-point constant of L_0 in this normalization; derived by the
// bracket oracle in the test suite, not quoted from anywhere.
inline Rat fockZeroPoint() { return Rat(1, 16); }

// L_k = (1/2) sum_r :alpha_{k-r} alpha_r: (+ zeroPoint when k = 0); lowers
// the level by k. LevelOverflow when a creation pushes past cap2.
FockVector virasoroApply(int k, const FockVector& v, const Rat& zeroPoint, int cap2);

// [L_m, L_n](v) - (m-n) L_{m+n}(v); equals c/12 (m^3-m) delta_{m+n,0} v.
FockVector bracketDefect(int m, int n, const FockVector& v, const Rat& zeroPoint, int cap2);

struct ClosurePair {
  int m, n;
  bool pass;
};
struct ClosureReport {
  std::vector<ClosurePair> pairs;
  bool allPass;
};
// Checks that the defect vanishes identically on the whole basis through
// levelCap2 for every pair m, n in [kmin, kmax]; the central term cannot
// fire there except with m^3 - m = 0.
ClosureReport subalgebraClosureReport(int kmin, int kmax, int levelCap2);

// t_k = -(2k-1)!! sum_i lambda_i^{-(2k+1)}; eigenvalues must be positive.
Rat kwTrace(int k, const std::vector<Rat>& eigenvalues);
// [sum_i gamma_{-k-1/2}(lambda_i^2)] / [sum_i lambda_i^{-2k-1}] = 1/Gamma(1/2-k),
// independent of the eigenvalue list.
Scalar kwGammaComparison(int k, const std::vector<Rat>& eigenvalues);

// q_k: coefficient of t^k in prod_i (1 + x_i t)/(1 - x_i t).
Rat schurQSingle(long k, const std::vector<Rat>& variables);
// Q_lambda for a strict partition via the two-row expansion and, for longer
// partitions, the Pfaffian of the two-row matrix.
Rat schurQ(const std::vector<long>& lambda, const std::vector<Rat>& variables);

}  // namespace tate
