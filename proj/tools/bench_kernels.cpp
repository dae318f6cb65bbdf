// Timing harness for the OpenMP kernels against their serial references.
// Every case first checks that both paths produce identical results, then
// reports best-of-N wall times.

#include <chrono>
#include <cstdio>
#include <random>

#include "tate/fgl.hpp"
#include "tate/fock.hpp"
#include "tate/kernels.hpp"
#include "tate/literal.hpp"

using namespace tate;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double bestMs(Fn&& fn, int reps) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

Series denseSeries(const Ring& ring, Exp lo, Exp hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Series::Term> terms;
  for (Exp e = lo; e <= hi; e += 2) {
    Mono m;
    if (ring.eps > 1) m.eps = int(rng() % ring.eps);
    Scalar c = Scalar::monomial(ring, m, Rat(num(rng), den(rng)));
    if (!c.isZero()) terms.push_back({e, c});
  }
  return Series::fromTermsChecked(ring, {lo, hi}, std::move(terms));
}

void row(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s %10.2f ms %10.2f ms   x%.2f   identical=%s\n", name, serial, parallel,
              serial / parallel, identical ? "yes" : "NO");
}

}  // namespace

int main() {
  std::mt19937_64 rng(5);
#ifdef _OPENMP
  std::printf("OpenMP enabled; comparing serial reference vs parallel kernels\n");
#else
  std::printf("built without OpenMP; both columns run the serial reference\n");
#endif
  std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

  {
    const Ring ring = ringNil(3);
    Series f = denseSeries(ring, -128, 1024, rng);
    Series g = denseSeries(ring, -128, 1024, rng);
    kernels::setParallel(false);
    Series ref = mul(f, g);
    const double ts = bestMs([&] { (void)mul(f, g); }, 3);
    kernels::setParallel(true);
    Series par = mul(f, g);
    const double tp = bestMs([&] { (void)mul(f, g); }, 3);
    row("series multiply (577 terms)", ts, tp, ref == par);
  }

  {
    TateModule t = makeTate(Fgl::additive(ringQ(), 12), parseWindowSpec("-41,40"));
    kernels::setParallel(false);
    auto ref = gramMatrix(t, FormKind::Symplectic, -40, 39);
    const double ts = bestMs([&] { (void)gramMatrix(t, FormKind::Symplectic, -40, 39); }, 3);
    kernels::setParallel(true);
    auto par = gramMatrix(t, FormKind::Symplectic, -40, 39);
    const double tp = bestMs([&] { (void)gramMatrix(t, FormKind::Symplectic, -40, 39); }, 3);
    row("symplectic Gram 80x80", ts, tp, ref == par);
  }

  {
    kernels::setParallel(false);
    auto ref = subalgebraClosureReport(-1, 3, 16);
    const double ts = bestMs([&] { (void)subalgebraClosureReport(-1, 3, 16); }, 2);
    kernels::setParallel(true);
    auto par = subalgebraClosureReport(-1, 3, 16);
    const double tp = bestMs([&] { (void)subalgebraClosureReport(-1, 3, 16); }, 2);
    bool same = ref.allPass == par.allPass && ref.pairs.size() == par.pairs.size();
    for (std::size_t i = 0; same && i < ref.pairs.size(); ++i)
      same = ref.pairs[i].m == par.pairs[i].m && ref.pairs[i].n == par.pairs[i].n &&
             ref.pairs[i].pass == par.pairs[i].pass;
    row("Virasoro bracket scan", ts, tp, same);
  }

  kernels::setParallel(true);
  return 0;
}
