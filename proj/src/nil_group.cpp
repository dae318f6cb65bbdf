#include "tate/nil_group.hpp"

#include "tate/literal.hpp"

namespace tate {

namespace {

// Shared shape check; step 2 for the x-lattice, 1 for the y-lattice. The
// reported index k refers to the coefficient g_k of x^{k+1}.
void checkShape(const Series& g, Exp step, bool oddOnly) {
  require(g.window().lo <= step && step <= g.window().hi, Err::WindowError,
          "window does not reach the linear coefficient");
  for (const auto& [e, c] : g.terms()) {
    if (oddOnly)
      require(e % 2 != 0, Err::DomainError,
              "even exponent in an odd series: " + printFrac(e));
    else
      require(e % step == 0, Err::DomainError,
              "exponent off the integer lattice: " + printFrac(e));
    if (e <= 0)
      require(c.isNilpotent(), Err::NotNilpotent,
              "coefficient g_k at k = " + std::to_string(e / step - 1) + " is not nilpotent");
  }
  const Scalar* unit = g.find(step);
  require(unit != nullptr && unit->isUnit(), Err::NotAUnit,
          "linear coefficient g_0 is not a unit");
}

}  // namespace

NilElement nilValidate(Series g) {
  checkShape(g, 2, false);
  return NilElement{std::move(g)};
}

NilElement nilCompose(const NilElement& a, const NilElement& b) {
  return nilValidate(compose(a.series, b.series));
}

NilElement nilInverse(const NilElement& a) { return nilValidate(reversion(a.series)); }

Series nilAct(const NilElement& a, const Series& f) { return compose(f, a.series); }

OddElement toOddHalf(const NilElement& a) { return oddValidate(sqrtOdd(a.series)); }

OddElement oddValidate(Series h) {
  checkShape(h, 1, true);
  return OddElement{std::move(h)};
}

OddElement oddCompose(const OddElement& a, const OddElement& b) {
  return oddValidate(composeOdd(a.series, b.series));
}

OddElement oddInverse(const OddElement& a) { return oddValidate(reversionOdd(a.series)); }

Series oddAct(const OddElement& a, const Series& f) { return composeOdd(f, a.series); }

}  // namespace tate
