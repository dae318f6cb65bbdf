#include "tate/kernels.hpp"

#include <algorithm>
#include <cstdlib>

namespace tate::kernels {

namespace {

bool initialMode() {
  const char* env = std::getenv("TATE_SERIAL");
  if (env && env[0] != '\0' && env[0] != '0') return false;
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

bool& modeFlag() {
  static bool on = initialMode();
  return on;
}

// Coefficient of the output exponent e, accumulated in ascending order of
// the f-exponent so serial and parallel paths add in the same order.
Scalar slot(const std::vector<Term>& f, const std::vector<Term>& g, const Ring& ring, Exp e) {
  std::vector<Scalar::Term> buf;
  for (const auto& [a, ca] : f) {
    const Exp b = e - a;
    auto it = std::lower_bound(g.begin(), g.end(), b,
                               [](const Term& t, Exp key) { return t.first < key; });
    if (it != g.end() && it->first == b) Scalar::mulInto(ca, it->second, buf);
  }
  return Scalar::fromTerms(ring, std::move(buf));
}

}  // namespace

bool parallelEnabled() { return modeFlag(); }
void setParallel(bool on) { modeFlag() = on; }

std::vector<Term> convolveSerial(const std::vector<Term>& f, const std::vector<Term>& g,
                                 const Ring& ring, Exp lo, Exp hi) {
  std::vector<Term> out;
  if (lo > hi) return out;
  const std::vector<Term>& small = f.size() <= g.size() ? f : g;
  const std::vector<Term>& large = f.size() <= g.size() ? g : f;
  for (Exp e = lo; e <= hi; ++e) {
    Scalar c = slot(small, large, ring, e);
    if (!c.isZero()) out.push_back({e, std::move(c)});
  }
  return out;
}

std::vector<Term> convolveParallel(const std::vector<Term>& f, const std::vector<Term>& g,
                                   const Ring& ring, Exp lo, Exp hi) {
  std::vector<Term> out;
  if (lo > hi) return out;
  const std::vector<Term>& small = f.size() <= g.size() ? f : g;
  const std::vector<Term>& large = f.size() <= g.size() ? g : f;
  const long n = long(hi - lo + 1);
  std::vector<std::optional<Scalar>> slots(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < n; ++i) slots[i].emplace(slot(small, large, ring, lo + i));
  for (long i = 0; i < n; ++i)
    if (!slots[i]->isZero()) out.push_back({lo + i, std::move(*slots[i])});
  return out;
}

std::vector<Term> convolve(const std::vector<Term>& f, const std::vector<Term>& g,
                           const Ring& ring, Exp lo, Exp hi) {
  if (lo > hi) return {};
  const std::size_t work = std::size_t(hi - lo + 1) * std::min(f.size(), g.size());
  if (!parallelEnabled() || work < kConvolveGrain) return convolveSerial(f, g, ring, lo, hi);
  return convolveParallel(f, g, ring, lo, hi);
}

}  // namespace tate::kernels
