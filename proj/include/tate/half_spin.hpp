#pragma once

#include "tate/fgl.hpp"
#include "tate/series.hpp"

namespace tate {

// Fractional divided powers gamma_s(x) = x^s / Gamma(1+s) and the
// half-integral embedding e^k -> gamma_{-k-1/2}(x) of the Tate module
// into series in sqrt(x), which rescales the residue symplectic form by a
// single constant carrying the suppressed powers of pi.

// The monomial gamma_s(x); s is a half-integer stored doubled. GammaPole
// where Gamma(1+s) is undefined.
Series gammaSeries(int s2);

// Linear extension of e^k -> gamma_{-k-1/2}(x); f must be over plain Q.
Series embed(const Series& f);
// Same with each generator rescaled by pi^{1/2}, for callers who want the
// comparison constant to be +-1 instead of 1/pi.
Series embedRescaled(const Series& f);

// {u, v} = res_{x=0} u dv, i.e. the x^{-1} coefficient of u * dv/dx.
Scalar xsymplectic(const Series& u, const Series& v);

// Ratio {embed e^j, embed e^k} / {e^j, e^k} for j + k = -1 (DomainError
// otherwise); the embedding rescales the form by this one constant.
Scalar comparisonScalar(const TateModule& t, long j, long k);

}  // namespace tate
