#include "tate/scalar.hpp"

#include <algorithm>
#include <map>

namespace tate {

const char* errName(Err e) {
  switch (e) {
    case Err::NotAUnit: return "NotAUnit";
    case Err::GammaPole: return "GammaPole";
    case Err::DomainError: return "DomainError";
    case Err::RingMismatch: return "RingMismatch";
    case Err::WindowError: return "WindowError";
    case Err::InvalidSubstitution: return "InvalidSubstitution";
    case Err::NotInvertible: return "NotInvertible";
    case Err::LeadingNotASquare: return "LeadingNotASquare";
    case Err::NotNilpotent: return "NotNilpotent";
    case Err::AxiomViolation: return "AxiomViolation";
    case Err::LevelOverflow: return "LevelOverflow";
    case Err::NonPositiveEigenvalue: return "NonPositiveEigenvalue";
    case Err::NotStrict: return "NotStrict";
    case Err::GradingMismatch: return "GradingMismatch";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

std::string Ring::str() const {
  std::string s = "Q";
  if (pi) s += "[pi^(1/2),pi^(-1/2)]";
  if (t) s += "[t,t^(-1)]";
  if (eps > 1) s += "[eps]/(eps^" + std::to_string(eps) + ")";
  return s;
}

Scalar::Scalar(Ring r, const Rat& c) : ring_(r) {
  if (!c.isZero()) terms_.push_back({Mono{}, c});
}

Scalar Scalar::monomial(Ring r, Mono m, const Rat& c) {
  Scalar s(r);
  if (m.eps >= r.eps) return s;  // eps^k = 0 for k >= order
  require(m.pi2 == 0 || r.pi, Err::RingMismatch, "pi power outside ring");
  require(m.tp == 0 || r.t, Err::RingMismatch, "t power outside ring");
  require(m.eps >= 0, Err::DomainError, "negative eps power");
  if (!c.isZero()) s.terms_.push_back({m, c});
  return s;
}

Scalar Scalar::fromTerms(Ring r, std::vector<Term> terms) {
  Scalar s(r);
  s.terms_ = std::move(terms);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    require(m.eps >= 0, Err::DomainError, "negative eps power");
    if (m.eps >= ring_.eps) continue;
    require(m.pi2 == 0 || ring_.pi, Err::RingMismatch, "pi power outside ring");
    require(m.tp == 0 || ring_.t, Err::RingMismatch, "t power outside ring");
    if (!out.empty() && out.back().first == m)
      out.back().second += c;
    else
      out.push_back({m, c});
  }
  std::erase_if(out, [](const Term& t) { return t.second.isZero(); });
  terms_ = std::move(out);
}

void Scalar::checkRing(const Scalar& o) const {
  require(ring_ == o.ring_, Err::RingMismatch,
          "operands in different rings: " + ring_.str() + " vs " + o.ring_.str());
}

bool Scalar::isOne() const {
  return terms_.size() == 1 && terms_[0].first == Mono{} && terms_[0].second.isOne();
}

bool Scalar::isUnit() const {
  int count = 0;
  for (const auto& [m, c] : terms_)
    if (m.eps == 0) ++count;
  return count == 1;
}

bool Scalar::isNilpotent() const {
  for (const auto& [m, c] : terms_)
    if (m.eps == 0) return false;
  return true;
}

Rat Scalar::rationalPart() const {
  for (const auto& [m, c] : terms_)
    if (m == Mono{}) return c;
  return Rat(0);
}

Scalar Scalar::epsSlice(int j) const {
  Scalar s(ring_);
  for (const auto& [m, c] : terms_)
    if (m.eps == j) s.terms_.push_back({m, c});
  return s;
}

int Scalar::minEpsGrade() const {
  int g = ring_.eps;
  for (const auto& [m, c] : terms_) g = std::min(g, m.eps);
  return g;
}

Scalar Scalar::operator-() const {
  Scalar s(ring_);
  s.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.terms_.push_back({m, -c});
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkRing(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return fromTerms(ring_, std::move(merged));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  checkRing(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  mulInto(*this, o, prod);
  return fromTerms(ring_, std::move(prod));
}

void Scalar::mulInto(const Scalar& a, const Scalar& b, std::vector<Term>& buf) {
  a.checkRing(b);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m{ma.pi2 + mb.pi2, ma.eps + mb.eps, ma.tp + mb.tp};
      if (m.eps >= a.ring_.eps) continue;
      buf.push_back({m, ca * cb});
    }
  }
}

Scalar Scalar::mulRat(const Rat& c) const {
  if (c.isZero()) return Scalar(ring_);
  Scalar s(ring_);
  s.terms_.reserve(terms_.size());
  for (const auto& [m, a] : terms_) s.terms_.push_back({m, a * c});
  return s;
}

Scalar Scalar::inverse() const {
  require(isUnit(), Err::NotAUnit, "inverse of a non-unit scalar");
  // Split as u(1 + w) with u the eps-degree-0 monomial and w nilpotent;
  // then 1/u is the monomial inverse and (1+w)^{-1} is a finite sum.
  Term unit{};
  for (const auto& tm : terms_)
    if (tm.first.eps == 0) unit = tm;
  Scalar uInv = monomial(ring_, Mono{-unit.first.pi2, 0, -unit.first.tp}, unit.second.inverse());
  Scalar w = (*this - epsZero()) * uInv;
  Scalar acc(ring_, 1);
  Scalar powW(ring_, 1);
  for (int i = 1; i < ring_.eps; ++i) {
    powW = powW * (-w);
    acc = acc + powW;
  }
  return acc * uInv;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(ring_, 1);
  for (long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::optional<Scalar> Scalar::sqrtUnit() const {
  if (!isUnit()) return std::nullopt;
  Term unit{};
  for (const auto& tm : terms_)
    if (tm.first.eps == 0) unit = tm;
  if (unit.first.pi2 % 2 != 0 || unit.first.tp % 2 != 0) return std::nullopt;
  auto root = unit.second.sqrt();
  if (!root) return std::nullopt;
  Scalar r = monomial(ring_, Mono{unit.first.pi2 / 2, 0, unit.first.tp / 2}, *root);
  Scalar uInv = monomial(ring_, Mono{-unit.first.pi2, 0, -unit.first.tp}, unit.second.inverse());
  Scalar w = (*this - epsZero()) * uInv;  // nilpotent remainder over the unit
  // (1 + w)^{1/2} by the binomial series; terminates at the eps order.
  Scalar acc(ring_, 1);
  Scalar powW(ring_, 1);
  for (int i = 1; i < ring_.eps; ++i) {
    powW = powW * w;
    acc = acc + powW.mulRat(Rat::binomial(Rat(1, 2), i));
  }
  return r * acc;
}

Scalar Scalar::promote(Ring target) const {
  require(ring_.containedIn(target), Err::RingMismatch,
          "cannot promote " + ring_.str() + " into " + target.str());
  Scalar s(target);
  s.terms_ = terms_;
  return s;
}

Scalar Scalar::evalT(const Rat& value) const {
  Ring target = ring_;
  target.t = false;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    out.push_back({Mono{m.pi2, m.eps, 0}, c * value.pow(m.tp)});
  return fromTerms(target, std::move(out));
}

Scalar gammaHalf(int s2) {
  const int t2 = s2 + 2;  // argument of Gamma, doubled
  if (t2 % 2 == 0) {
    const int t = t2 / 2;
    require(t >= 1, Err::GammaPole, "Gamma pole at non-positive integer " + std::to_string(t));
    return Scalar(ringQPi(), Rat::factorial(t - 1));
  }
  // Half-odd argument: walk the recursion from Gamma(1/2) = pi^{1/2}.
  Rat q = 1;
  int cur2 = 1;  // doubled argument currently at 1/2
  while (cur2 < t2) {
    q *= Rat(cur2, 2);
    cur2 += 2;
  }
  while (cur2 > t2) {
    cur2 -= 2;
    q = q / Rat(cur2, 2);
  }
  return Scalar::monomial(ringQPi(), Mono{1, 0, 0}, q);
}

Rat doubleFactorial(long m) {
  require(m >= -1 && m % 2 != 0, Err::DomainError,
          "double factorial defined for odd integers >= -1");
  Rat r = 1;
  for (long k = m; k >= 1; k -= 2) r *= Rat(k);
  return r;
}

}  // namespace tate
