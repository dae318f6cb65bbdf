#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tate/series.hpp"

namespace tate {

// Text forms used by the CLI and file formats. Printing is canonical
// (ascending exponents, then generator monomials) and parsing accepts
// exactly what printing emits, plus optional extra whitespace, so
// print -> parse round-trips are identity.
//
//   RAT    := '-'? digits ('/' digits)?
//   FRAC   := INT | INT '/2'                      (half-integers)
//   MONO   := RAT ('*pi^(' FRAC ')')? ('*eps^' INT)? ('*t^(' INT ')')?
//   SCALAR := MONO (' + ' MONO)* | '0'
//   TERM   := MONO '*x^(' FRAC ')'
//   SERIES := (TERM (' + ' TERM)* | '0') ' @[' FRAC ',' FRAC ']'

std::string printFrac(Exp doubled);
std::string printScalar(const Scalar& s);
std::string printSeries(const Series& f);

Rat parseRat(std::string_view text);
Exp parseFrac(std::string_view text);  // returns the doubled value
Scalar parseScalar(std::string_view text, const Ring& ring);
Series parseSeries(std::string_view text, const Ring& ring);

// "lo,hi" with half-integer endpoints, e.g. "-8,8" or "-17/2,6".
Window parseWindowSpec(std::string_view text);
// Comma-separated rationals: "1,1/2,3".
std::vector<Rat> parseRatList(std::string_view text);
// Comma-separated integers: "3,2,1".
std::vector<long> parseIntList(std::string_view text);
// Semicolon-separated rows of comma-separated rationals: "0,0;1,0".
std::vector<std::vector<Rat>> parseRatMatrix(std::string_view text);
// "lo..hi" integer range.
std::pair<long, long> parseRange(std::string_view text);

// Two-variable coefficient grid for a formal group law, pre-validation:
//   x + y + 1*x^1*y^1 @deg 12
// Terms are '*'-joined factors with an optional leading rational; bare x/y
// mean exponent one. The trailing degree annotation is optional (0 = unset).
struct FglGridSpec {
  std::vector<std::tuple<int, int, Rat>> terms;  // (i, j, coefficient), sorted
  int degree = 0;
  friend bool operator==(const FglGridSpec&, const FglGridSpec&) = default;
};

FglGridSpec parseFglGrid(std::string_view text);
std::string printFglGrid(const FglGridSpec& spec);

}  // namespace tate
