#include <doctest.h>

#include <random>

#include "tate/literal.hpp"

using namespace tate;

TEST_CASE("spec literal forms parse to the expected values") {
  Ring rp = ringNil(3, true);
  Scalar s = parseScalar("3/4*pi^(-1/2)", rp);
  CHECK(s == Scalar::monomial(rp, Mono{-1, 0, 0}, Rat(3, 4)));
  CHECK(parseScalar("1*eps^2", rp) == Scalar::monomial(rp, Mono{0, 2, 0}, 1));
  CHECK(parseScalar("0", rp).isZero());

  Series f = parseSeries("1*x^(-1) + 3/4*pi^(-1/2)*x^(1/2) @[-2,2]", rp);
  CHECK(f.window() == Window{-4, 4});
  CHECK(f.coeffOr0(-2) == Scalar(rp, 1));
  CHECK(f.coeffOr0(1) == Scalar::monomial(rp, Mono{-1, 0, 0}, Rat(3, 4)));
  CHECK(printSeries(f) == "1*x^(-1) + 3/4*pi^(-1/2)*x^(1/2) @[-2,2]");

  CHECK(printSeries(parseSeries("0 @[-2,2]", ringQ())) == "0 @[-2,2]");
  CHECK_THROWS_AS(parseSeries("1*x^(5) @[-2,2]", ringQ()), Error);   // outside window
  CHECK_THROWS_AS(parseSeries("1*x^(1) @[2,-2]", ringQ()), Error);   // inverted window
  CHECK_THROWS_AS(parseScalar("1*pi^(1)", ringQ()), Error);          // pi outside ring
  CHECK_THROWS_AS(parseScalar("1x", ringQ()), Error);                // trailing garbage
}

TEST_CASE("formal group law grid literals") {
  FglGridSpec s = parseFglGrid("x + y + 1*x^1*y^1 @deg 12");
  CHECK(s.degree == 12);
  REQUIRE(s.terms.size() == 3);
  CHECK(s.terms[0] == std::tuple<int, int, Rat>{1, 0, Rat(1)});
  CHECK(s.terms[1] == std::tuple<int, int, Rat>{0, 1, Rat(1)});
  CHECK(s.terms[2] == std::tuple<int, int, Rat>{1, 1, Rat(1)});
  CHECK(printFglGrid(s) == "x + y + 1*x^1*y^1 @deg 12");
  CHECK(parseFglGrid(printFglGrid(s)) == s);

  FglGridSpec c = parseFglGrid("x + y + -1/2*x^2*y^1 + -1/2*x^1*y^2");
  CHECK(c.degree == 0);
  CHECK(c.terms.size() == 4);
  CHECK_THROWS_AS(parseFglGrid("x + z"), Error);
  CHECK_THROWS_AS(parseFglGrid("x + y @deg"), Error);
}

TEST_CASE("windows and lists parse") {
  CHECK(parseWindowSpec("-8,8") == Window{-16, 16});
  CHECK(parseWindowSpec("-17/2,8") == Window{-17, 16});
  CHECK(parseRatList("1,1/2,-3").size() == 3);
  CHECK(parseIntList("3,2,1") == std::vector<long>{3, 2, 1});
  auto m = parseRatMatrix("0,0;1,0");
  CHECK(m.size() == 2);
  CHECK(m[1][0] == Rat(1));
  CHECK(parseRange("-3..2") == std::pair<long, long>{-3, 2});
  CHECK_THROWS_AS(parseRange("3..2"), Error);
}

namespace {

Scalar randomScalar(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), num(-9, 9), den(1, 7), small(-3, 3);
  std::vector<Scalar::Term> terms;
  for (int i = 0, n = nterms(rng); i < n; ++i) {
    Mono m;
    if (ring.pi) m.pi2 = small(rng);
    if (ring.eps > 1) m.eps = std::uniform_int_distribution<int>(0, ring.eps - 1)(rng);
    if (ring.t) m.tp = small(rng);
    terms.push_back({m, Rat(num(rng), den(rng))});
  }
  return Scalar::fromTerms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("print/parse round-trips on random values of every literal type") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (Ring ring : {ringQ(), ringQPi(), ringNil(3), {.pi = true, .t = true, .eps = 2}}) {
    for (int i = 0; i < 200; ++i) {
      Scalar s = randomScalar(ring, rng);
      CHECK(parseScalar(printScalar(s), ring) == s);

      std::vector<Series::Term> terms;
      Exp lo = -8 - Exp(rng() % 8), hi = Exp(rng() % 12);
      for (Exp e = lo; e <= hi; ++e) {
        Scalar c = randomScalar(ring, rng);
        if (rng() % 3 == 0 && !c.isZero()) terms.push_back({e, c});
      }
      Series f = Series::fromTermsChecked(ring, {lo, hi}, std::move(terms));
      CHECK(parseSeries(printSeries(f), ring) == f);
    }
  }
}
