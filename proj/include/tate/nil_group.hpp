#pragma once

#include "tate/series.hpp"

namespace tate {

// Validated member of the composition group of nil-Laurent series: writing
// g = sum g_k x^{k+1}, the linear coefficient g_0 is a unit and every g_k
// with k < 0 is nilpotent. Composition is substitution; the group acts on
// Laurent series by act(g, f) = f o g (a right action).
struct NilElement {
  Series series;
};

// Odd counterpart in y = sqrt(x): only odd doubled exponents, unit leading
// coefficient at y, nilpotent coefficients below.
struct OddElement {
  Series series;
};

NilElement nilValidate(Series g);
NilElement nilCompose(const NilElement& a, const NilElement& b);  // a o b
NilElement nilInverse(const NilElement& a);
Series nilAct(const NilElement& a, const Series& f);  // f o a
// Square-root passage: h with h(y)^2 = g(y^2).
OddElement toOddHalf(const NilElement& a);

OddElement oddValidate(Series h);
OddElement oddCompose(const OddElement& a, const OddElement& b);
OddElement oddInverse(const OddElement& a);
Series oddAct(const OddElement& a, const Series& f);  // substitution y -> a(y)

}  // namespace tate
