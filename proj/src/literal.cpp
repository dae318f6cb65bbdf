#include "tate/literal.hpp"

#include <algorithm>
#include <cctype>

namespace tate {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : s_(text) {}

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ >= s_.size();
  }
  bool tryLit(std::string_view lit) {
    skipSpace();
    if (s_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view lit) {
    require(tryLit(lit), Err::ParseError,
            "expected '" + std::string(lit) + "' at position " + std::to_string(pos_) + " in '" +
                std::string(s_) + "'");
  }
  long integer() {
    skipSpace();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    require(pos_ > digits, Err::ParseError, "expected an integer in '" + std::string(s_) + "'");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Rat rat() {
    long num = integer();
    if (tryLitNoSpace("/")) {
      long den = integer();
      require(den != 0, Err::ParseError, "zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }
  // FRAC: INT or INT/2, returned doubled.
  Exp frac() {
    long num = integer();
    if (tryLitNoSpace("/")) {
      long den = integer();
      require(den == 2, Err::ParseError, "half-integer literals use denominator 2");
      return num;
    }
    return 2 * num;
  }
  bool peekNumber() {
    skipSpace();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }

 private:
  bool tryLitNoSpace(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// One scalar monomial: RAT with optional pi/eps/t factors.
std::pair<Mono, Rat> parseMono(Scanner& sc, const Ring& ring) {
  Rat c = sc.rat();
  Mono m;
  if (sc.tryLit("*pi^(")) {
    require(ring.pi, Err::ParseError, "pi power outside the ring " + ring.str());
    m.pi2 = int(sc.frac());
    sc.expect(")");
  }
  if (sc.tryLit("*eps^")) {
    require(ring.eps > 1, Err::ParseError, "eps power outside the ring " + ring.str());
    long e = sc.integer();
    require(e >= 0, Err::ParseError, "negative eps power");
    m.eps = int(e);
  }
  if (sc.tryLit("*t^(")) {
    require(ring.t, Err::ParseError, "t power outside the ring " + ring.str());
    m.tp = int(sc.integer());
    sc.expect(")");
  }
  return {m, c};
}

std::string printMono(const Mono& m, const Rat& c) {
  std::string out = c.str();
  if (m.pi2 != 0) out += "*pi^(" + printFrac(m.pi2) + ")";
  if (m.eps != 0) out += "*eps^" + std::to_string(m.eps);
  if (m.tp != 0) out += "*t^(" + std::to_string(m.tp) + ")";
  return out;
}

}  // namespace

std::string printFrac(Exp doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string printScalar(const Scalar& s) {
  if (s.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += printMono(m, c);
  }
  return out;
}

std::string printSeries(const Series& f) {
  require(!isInfExp(f.window().hi) && f.window().lo > -(Exp(1) << 57), Err::DomainError,
          "only finite windows have a literal form");
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [m, q] : c.terms()) {
      if (!out.empty()) out += " + ";
      out += printMono(m, q) + "*x^(" + printFrac(e) + ")";
    }
  }
  if (out.empty()) out = "0";
  out += " @[" + printFrac(f.window().lo) + "," + printFrac(f.window().hi) + "]";
  return out;
}

Rat parseRat(std::string_view text) {
  Scanner sc(text);
  Rat r = sc.rat();
  require(sc.done(), Err::ParseError, "trailing input after rational: '" + std::string(text) + "'");
  return r;
}

Exp parseFrac(std::string_view text) {
  Scanner sc(text);
  Exp e = sc.frac();
  require(sc.done(), Err::ParseError, "trailing input after number: '" + std::string(text) + "'");
  return e;
}

Scalar parseScalar(std::string_view text, const Ring& ring) {
  Scanner sc(text);
  Scalar acc(ring);
  do {
    auto [m, c] = parseMono(sc, ring);
    acc += Scalar::monomial(ring, m, c);
  } while (sc.tryLit("+"));
  require(sc.done(), Err::ParseError, "trailing input after scalar: '" + std::string(text) + "'");
  return acc;
}

Series parseSeries(std::string_view text, const Ring& ring) {
  Scanner sc(text);
  std::vector<Series::Term> terms;
  do {
    auto [m, c] = parseMono(sc, ring);
    if (sc.tryLit("*x^(")) {
      Exp e = sc.frac();
      sc.expect(")");
      Scalar s = Scalar::monomial(ring, m, c);
      if (!s.isZero()) terms.push_back({e, std::move(s)});
    } else {
      // a bare scalar term is the x^0 coefficient (covers the "0" form)
      Scalar s = Scalar::monomial(ring, m, c);
      if (!s.isZero()) terms.push_back({0, std::move(s)});
    }
  } while (sc.tryLit("+"));
  sc.expect("@[");
  Exp lo = sc.frac();
  sc.expect(",");
  Exp hi = sc.frac();
  sc.expect("]");
  require(sc.done(), Err::ParseError, "trailing input after series: '" + std::string(text) + "'");
  require(lo <= hi, Err::ParseError, "window lower bound exceeds upper bound");
  return Series::fromTermsChecked(ring, Window{lo, hi}, std::move(terms));
}

Window parseWindowSpec(std::string_view text) {
  Scanner sc(text);
  Exp lo = sc.frac();
  sc.expect(",");
  Exp hi = sc.frac();
  require(sc.done(), Err::ParseError, "trailing input after window: '" + std::string(text) + "'");
  require(lo <= hi, Err::ParseError, "window lower bound exceeds upper bound");
  return Window{lo, hi};
}

std::vector<Rat> parseRatList(std::string_view text) {
  Scanner sc(text);
  std::vector<Rat> out;
  do {
    out.push_back(sc.rat());
  } while (sc.tryLit(","));
  require(sc.done(), Err::ParseError, "trailing input in list: '" + std::string(text) + "'");
  return out;
}

std::vector<long> parseIntList(std::string_view text) {
  Scanner sc(text);
  std::vector<long> out;
  do {
    out.push_back(sc.integer());
  } while (sc.tryLit(","));
  require(sc.done(), Err::ParseError, "trailing input in list: '" + std::string(text) + "'");
  return out;
}

std::vector<std::vector<Rat>> parseRatMatrix(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string_view row = text.substr(start, end == std::string_view::npos ? end : end - start);
    rows.push_back(parseRatList(row));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return rows;
}

std::pair<long, long> parseRange(std::string_view text) {
  Scanner sc(text);
  long lo = sc.integer();
  sc.expect("..");
  long hi = sc.integer();
  require(sc.done(), Err::ParseError, "trailing input in range: '" + std::string(text) + "'");
  require(lo <= hi, Err::ParseError, "empty range");
  return {lo, hi};
}

FglGridSpec parseFglGrid(std::string_view text) {
  Scanner sc(text);
  FglGridSpec spec;
  auto varFactor = [&](int& i, int& j) {
    if (sc.tryLit("x")) {
      i = sc.tryLit("^") ? int(sc.integer()) : 1;
    } else if (sc.tryLit("y")) {
      j = sc.tryLit("^") ? int(sc.integer()) : 1;
    } else {
      fail(Err::ParseError, "expected x or y factor in '" + std::string(text) + "'");
    }
  };
  do {
    Rat c(1);
    int i = 0, j = 0;
    if (sc.peekNumber())
      c = sc.rat();
    else
      varFactor(i, j);
    while (sc.tryLit("*")) varFactor(i, j);
    spec.terms.emplace_back(i, j, c);
  } while (sc.tryLit("+"));
  if (sc.tryLit("@deg")) spec.degree = int(sc.integer());
  require(sc.done(), Err::ParseError, "trailing input after grid: '" + std::string(text) + "'");
  std::sort(spec.terms.begin(), spec.terms.end(), [](const auto& a, const auto& b) {
    const auto [ai, aj, ac] = a;
    const auto [bi, bj, bc] = b;
    return std::tuple(ai + aj, aj) < std::tuple(bi + bj, bj);
  });
  return spec;
}

std::string printFglGrid(const FglGridSpec& spec) {
  std::string out;
  for (const auto& [i, j, c] : spec.terms) {
    if (!out.empty()) out += " + ";
    if (i == 1 && j == 0 && c.isOne()) {
      out += "x";
    } else if (i == 0 && j == 1 && c.isOne()) {
      out += "y";
    } else {
      out += c.str();
      if (i != 0) out += "*x^" + std::to_string(i);
      if (j != 0) out += "*y^" + std::to_string(j);
    }
  }
  if (out.empty()) out = "0";
  if (spec.degree != 0) out += " @deg " + std::to_string(spec.degree);
  return out;
}

}  // namespace tate
