#include <doctest.h>

#include <random>

#include "tate/scalar.hpp"

using namespace tate;

namespace {

Scalar randomScalar(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), num(-6, 6), den(1, 5), pi2(-2, 2);
  std::vector<Scalar::Term> terms;
  for (int i = 0, n = nterms(rng); i < n; ++i) {
    Mono m;
    if (ring.pi) m.pi2 = pi2(rng);
    if (ring.eps > 1) m.eps = std::uniform_int_distribution<int>(0, ring.eps - 1)(rng);
    if (ring.t) m.tp = pi2(rng);
    terms.push_back({m, Rat(num(rng), den(rng))});
  }
  return Scalar::fromTerms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK((Rat(3, 7) * Rat(7, 3)).isOne());
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK(Rat(9, 4).sqrt().value() == Rat(3, 2));
  CHECK(!Rat(2).sqrt().has_value());
  CHECK(!Rat(-1).sqrt().has_value());
  CHECK(Rat::binomial(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("nilpotent truncation forces eps^N = 0") {
  Ring r = ringNil(2);
  Scalar eps = Scalar::monomial(r, Mono{0, 1, 0}, 1);
  CHECK((eps * eps).isZero());
  Ring r3 = ringNil(3);
  Scalar e3 = Scalar::monomial(r3, Mono{0, 1, 0}, 1);
  CHECK(!(e3 * e3).isZero());
  CHECK((e3 * e3 * e3).isZero());
}

TEST_CASE("inverse of 1 + eps at order 3 is the terminating geometric series") {
  Ring r = ringNil(3);
  Scalar one(r, 1);
  Scalar eps = Scalar::monomial(r, Mono{0, 1, 0}, 1);
  Scalar inv = (one + eps).inverse();
  Scalar expect = one - eps + eps * eps;
  CHECK(inv == expect);
  CHECK((inv * (one + eps)).isOne());
}

TEST_CASE("inverse of a non-unit fails") {
  Ring r = ringNil(2);
  Scalar eps = Scalar::monomial(r, Mono{0, 1, 0}, 1);
  CHECK_THROWS_AS(eps.inverse(), Error);
  // 1 + pi has two terms of eps-degree zero, hence is not a unit here.
  Ring rp = ringQPi();
  Scalar s = Scalar(rp, 1) + Scalar::monomial(rp, Mono{2, 0, 0}, 1);
  CHECK(!s.isUnit());
  CHECK_THROWS_AS(s.inverse(), Error);
  CHECK(Scalar::monomial(rp, Mono{-1, 0, 0}, Rat(3, 4)).isUnit());
}

TEST_CASE("ring axioms hold on random triples in each ring") {
  std::mt19937_64 rng(7);
  for (Ring ring : {ringQ(), ringQPi(), ringNil(3), ringNil(2, true)}) {
    for (int i = 0; i < 1000; ++i) {
      Scalar a = randomScalar(ring, rng), b = randomScalar(ring, rng),
             c = randomScalar(ring, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * Scalar(ring, 1) == a);
      CHECK(a + Scalar(ring) == a);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("units invert exactly and nilpotents power to zero") {
  std::mt19937_64 rng(11);
  Ring ring = ringNil(3, true);
  int unitsSeen = 0, nilsSeen = 0;
  for (int i = 0; i < 400; ++i) {
    Scalar a = randomScalar(ring, rng);
    if (a.isUnit()) {
      ++unitsSeen;
      CHECK((a.inverse() * a).isOne());
    }
    if (a.isNilpotent()) {
      ++nilsSeen;
      CHECK(a.pow(ring.eps).isZero());
    }
  }
  CHECK(unitsSeen > 20);
  CHECK(nilsSeen > 20);
}

TEST_CASE("gamma at half-integers follows the recursion from Gamma(1/2)") {
  // gammaHalf takes s doubled and returns Gamma(1 + s).
  CHECK(gammaHalf(0) == Scalar(ringQPi(), 1));
  CHECK(gammaHalf(1) == Scalar::monomial(ringQPi(), Mono{1, 0, 0}, Rat(1, 2)));
  CHECK(gammaHalf(-5) == Scalar::monomial(ringQPi(), Mono{1, 0, 0}, Rat(4, 3)));
  CHECK(gammaHalf(4) == Scalar(ringQPi(), 2));  // Gamma(3) = 2
  CHECK_THROWS_AS(gammaHalf(-2), Error);        // Gamma(0)
  CHECK_THROWS_AS(gammaHalf(-6), Error);        // Gamma(-2)

  // Gamma(1 + (s+1)) = (1 + s) Gamma(1 + s) wherever both sides exist.
  for (int s2 = -13; s2 <= 13; ++s2) {
    const int t2 = s2 + 2;
    if (t2 % 2 == 0 && (t2 <= 0 || t2 + 2 <= 0)) continue;
    Scalar lhs = gammaHalf(s2 + 2);
    Scalar rhs = Scalar(ringQPi(), Rat(t2, 2)) * gammaHalf(s2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("double factorial convention") {
  CHECK(doubleFactorial(-1) == Rat(1));
  CHECK(doubleFactorial(1) == Rat(1));
  CHECK(doubleFactorial(5) == Rat(15));
  CHECK(doubleFactorial(9) == Rat(945));
  CHECK_THROWS_AS(doubleFactorial(4), Error);
  CHECK_THROWS_AS(doubleFactorial(-3), Error);
}

TEST_CASE("scalar square roots of units") {
  Ring r = ringNil(2);
  Scalar one(r, 1);
  Scalar eps = Scalar::monomial(r, Mono{0, 1, 0}, 1);
  Scalar s = one + eps;
  Scalar root = s.sqrtUnit().value();
  CHECK(root * root == s);
  CHECK(Scalar(r, 4).sqrtUnit().value() == Scalar(r, 2));
  CHECK(!Scalar(r, 2).sqrtUnit().has_value());
  CHECK(!Scalar::monomial(ringQPi(), Mono{1, 0, 0}, 1).sqrtUnit().has_value());
  Scalar pisq = Scalar::monomial(ringQPi(), Mono{2, 0, 0}, Rat(9, 16));
  CHECK(pisq.sqrtUnit().value() == Scalar::monomial(ringQPi(), Mono{1, 0, 0}, Rat(3, 4)));
}

TEST_CASE("promotion and t-evaluation") {
  Scalar q(ringQ(), Rat(2, 3));
  Scalar p = q.promote(ringNil(3, true));
  CHECK(p.ring() == ringNil(3, true));
  CHECK_THROWS_AS(p.promote(ringQ()), Error);

  Ring rt = ringT();
  Scalar s = Scalar::monomial(rt, Mono{0, 0, 2}, Rat(1, 2)) + Scalar(rt, 1);
  CHECK(s.evalT(Rat(2)) == Scalar(ringQ(), Rat(3)));
}
