#include <doctest.h>

#include <random>

#include "tate/kernels.hpp"
#include "tate/series.hpp"

using namespace tate;

namespace {

std::vector<kernels::Term> randomTerms(const Ring& ring, Exp lo, Exp hi, double density,
                                       std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<kernels::Term> out;
  for (Exp e = lo; e <= hi; ++e) {
    if (coin(rng) > density) continue;
    Mono m;
    if (ring.eps > 1) m.eps = int(rng() % ring.eps);
    out.push_back({e, Scalar::monomial(ring, m, Rat(num(rng), den(rng)))});
  }
  return out;
}

}  // namespace

TEST_CASE("parallel convolution agrees with the serial reference") {
  std::mt19937_64 rng(101);
  Ring ring = ringNil(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = randomTerms(ring, -40, 60, 0.7, rng);
    auto g = randomTerms(ring, -30, 80, 0.7, rng);
    auto serial = kernels::convolveSerial(f, g, ring, -70, 140);
    auto parallel = kernels::convolveParallel(f, g, ring, -70, 140);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].first == parallel[i].first);
      CHECK(serial[i].second == parallel[i].second);
    }
  }
}

TEST_CASE("series multiplication is identical in serial and parallel modes") {
  std::mt19937_64 rng(103);
  Ring ring = ringNil(2, true);
  auto ft = randomTerms(ring, -50, 120, 0.8, rng);
  auto gt = randomTerms(ring, -50, 120, 0.8, rng);
  Series f = Series::fromTermsChecked(ring, {-50, 120}, ft);
  Series g = Series::fromTermsChecked(ring, {-50, 120}, gt);

  const bool was = kernels::parallelEnabled();
  kernels::setParallel(false);
  Series serial = mul(f, g);
  kernels::setParallel(true);
  Series parallel = mul(f, g);
  kernels::setParallel(was);
  CHECK(serial == parallel);
}

TEST_CASE("grid fill and indexed map agree across modes") {
  auto gen = [](int i, int j) { return Rat(i * i + 3 * j + 1, j + 2); };
  auto a = kernels::fillGridSerial<Rat>(13, 17, gen);
  auto b = kernels::fillGridParallel<Rat>(13, 17, gen);
  CHECK(a == b);

  auto f = [](int i) { return Rat(i, i + 1); };
  auto u = kernels::mapIndexedSerial<Rat>(301, f);
  auto v = kernels::mapIndexed<Rat>(301, f);
  CHECK(u == v);
}
