#include "tate/half_spin.hpp"

namespace tate {

Series gammaSeries(int s2) {
  Scalar coeff = gammaHalf(s2).inverse();
  return Series::monomial(ringQPi(), s2, coeff);
}

namespace {

Series embedWith(const Series& f, bool rescale) {
  require(f.ring() == ringQ(), Err::RingMismatch,
          "the embedding is defined on series over plain Q");
  const Scalar piHalf = Scalar::monomial(ringQPi(), Mono{1, 0, 0}, 1);
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    require(e % 2 == 0, Err::DomainError, "the embedding acts on integer powers of e");
    // e^k -> x^{-k-1/2}/Gamma(1/2-k); the argument -k-1/2 is never a
    // negative integer, so the pole case cannot arise here.
    const int s2 = int(-e - 1);
    Scalar coeff = gammaHalf(s2).inverse().mulRat(c.rationalPart());
    if (rescale) coeff = coeff * piHalf;
    terms.push_back({s2, coeff});
  }
  // exponentwise reversal: window [lo, hi] maps to [-hi-1, -lo-1]
  const Exp wlo = isInfExp(f.window().hi) ? -kInfHi : -f.window().hi - 1;
  const Exp whi = f.window().lo <= -kInfHi ? kInfHi : -f.window().lo - 1;
  return Series::make(ringQPi(), Window{wlo, whi}, std::move(terms));
}

}  // namespace

Series embed(const Series& f) { return embedWith(f, false); }
Series embedRescaled(const Series& f) { return embedWith(f, true); }

Scalar xsymplectic(const Series& u, const Series& v) { return residue(mul(u, derivative(v))); }

Scalar comparisonScalar(const TateModule& t, long j, long k) {
  require(j + k == -1, Err::DomainError,
          "both forms vanish unless j + k = -1; the ratio is undefined");
  Scalar top = xsymplectic(embed(tateMonomial(t, j)), embed(tateMonomial(t, k)));
  Scalar bottom = tateSymplectic(t, tateMonomial(t, j), tateMonomial(t, k));
  return top * bottom.promote(ringQPi()).inverse();
}

}  // namespace tate
