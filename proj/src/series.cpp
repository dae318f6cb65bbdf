#include "tate/series.hpp"

#include <algorithm>
#include <map>

namespace tate {

namespace {

constexpr Exp kNegInf = -(Exp(1) << 58);

bool isNegInf(Exp e) { return e <= kNegInf; }

Exp satAddLo(Exp a, Exp b) {
  if (isNegInf(a) || isNegInf(b)) return kNegInf;
  return satAdd(a, b);
}

long ceilDiv(long a, long b) {  // b > 0
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Effective support floor used in window formulas: the declared lower bound,
// sharpened to the stored support for the exact values whose declared bound
// is -inf (the documented rule assumes finite annotations).
Exp effLo(const Series& f) { return isNegInf(f.window().lo) ? f.supportFloor() : f.window().lo; }

std::vector<Series::Term> mergeTerms(std::vector<Series::Term> a) {
  std::sort(a.begin(), a.end(),
            [](const Series::Term& x, const Series::Term& y) { return x.first < y.first; });
  std::vector<Series::Term> out;
  for (auto& t : a) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Series::Term& t) { return t.second.isZero(); });
  return out;
}

Series mulWithWindow(const Series& f, const Series& g, Window w) {
  require(f.ring() == g.ring(), Err::RingMismatch, "product of series over different rings");
  if (f.isZeroOnWindow() || g.isZeroOnWindow()) return Series::zero(f.ring(), w);
  const Exp clo = std::max(w.lo, f.supportFloor() + g.supportFloor());
  const Exp chi = std::min(w.hi, f.maxStored() + g.maxStored());
  auto terms = kernels::convolve(f.terms(), g.terms(), f.ring(), clo, chi);
  return Series::make(f.ring(), w, std::move(terms));
}

}  // namespace

Series::Series(Ring r, Window w) : ring_(r), win_(w) {
  require(w.lo <= w.hi, Err::WindowError, "window lower bound exceeds upper bound");
}

Series Series::make(Ring r, Window w, std::vector<Term> terms) {
  Series s(r, w);
  terms = mergeTerms(std::move(terms));
  std::erase_if(terms, [&](const Term& t) { return t.first > w.hi; });
  for (const auto& [e, c] : terms)
    require(e >= w.lo, Err::DomainError, "internal: coefficient below the derived window");
  s.terms_ = std::move(terms);
  return s;
}

Series Series::fromTermsChecked(Ring r, Window w, std::vector<Term> terms) {
  terms = mergeTerms(std::move(terms));
  for (const auto& [e, c] : terms) {
    require(e >= w.lo && e <= w.hi, Err::WindowError,
            "coefficient at exponent outside the annotated window");
    require(c.ring() == r, Err::RingMismatch, "coefficient outside the series ring");
  }
  Series s(r, w);
  s.terms_ = std::move(terms);
  return s;
}

Series Series::monomial(Ring r, Exp e, const Scalar& c) {
  return monomial(r, e, c, Window{kNegInf, kInfHi});
}

Series Series::monomial(Ring r, Exp e, const Scalar& c, Window w) {
  std::vector<Term> t;
  if (!c.isZero()) t.push_back({e, c.promote(r)});
  return fromTermsChecked(r, w, std::move(t));
}

const Scalar* Series::find(Exp e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exp key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) return &it->second;
  return nullptr;
}

Scalar Series::coeffOr0(Exp e) const {
  const Scalar* c = find(e);
  return c ? *c : Scalar(ring_);
}

Exp Series::supportFloor() const {
  return terms_.empty() ? satAdd(win_.hi, 1) : terms_.front().first;
}

Exp Series::maxStored() const { return terms_.empty() ? kNegInf : terms_.back().first; }

Series add(const Series& f, const Series& g) {
  require(f.ring() == g.ring(), Err::RingMismatch, "sum of series over different rings");
  Window w{std::max(f.window().lo, g.window().lo), std::min(f.window().hi, g.window().hi)};
  require(w.lo <= w.hi, Err::WindowError, "windows do not overlap");
  std::vector<Series::Term> terms;
  for (const auto& t : f.terms())
    if (t.first >= w.lo && t.first <= w.hi) terms.push_back(t);
  for (const auto& t : g.terms())
    if (t.first >= w.lo && t.first <= w.hi) terms.push_back(t);
  return Series::make(f.ring(), w, std::move(terms));
}

Series neg(const Series& f) {
  std::vector<Series::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) terms.push_back({e, -c});
  return Series::make(f.ring(), f.window(), std::move(terms));
}

Series sub(const Series& f, const Series& g) { return add(f, neg(g)); }

Series scalarMul(const Scalar& c, const Series& f) {
  require(c.ring() == f.ring(), Err::RingMismatch, "scalar outside the series ring");
  std::vector<Series::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [e, a] : f.terms()) terms.push_back({e, c * a});
  return Series::make(f.ring(), f.window(), std::move(terms));
}

Series mulRat(const Rat& c, const Series& f) { return scalarMul(Scalar(f.ring(), c), f); }

Series mul(const Series& f, const Series& g) {
  Window w{satAddLo(f.window().lo, g.window().lo),
           std::min(satAdd(effLo(f), g.window().hi), satAdd(f.window().hi, effLo(g)))};
  return mulWithWindow(f, g, w);
}

Series derivative(const Series& f) {
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    terms.push_back({e - 2, c.mulRat(Rat(e, 2))});
  }
  Window w{satAddLo(f.window().lo, -2), satAdd(f.window().hi, -2)};
  return Series::make(f.ring(), w, std::move(terms));
}

Series derivativeY(const Series& f) {
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    terms.push_back({e - 1, c.mulRat(Rat(e))});
  }
  Window w{satAddLo(f.window().lo, -1), satAdd(f.window().hi, -1)};
  return Series::make(f.ring(), w, std::move(terms));
}

Scalar residue(const Series& f) {
  require(f.window().lo <= -2 && -2 <= f.window().hi, Err::WindowError,
          "window excludes exponent -1; the residue is unknowable");
  return f.coeffOr0(-2);
}

Scalar residueY(const Series& f) {
  require(f.window().lo <= -1 && -1 <= f.window().hi, Err::WindowError,
          "window excludes exponent -1/2; the y-residue is unknowable");
  return f.coeffOr0(-1);
}

Series projectGeq(const Series& f, Exp m) {
  require(m <= f.window().hi, Err::WindowError, "projection floor above the known window");
  std::vector<Series::Term> terms;
  for (const auto& t : f.terms())
    if (t.first >= m) terms.push_back(t);
  return Series::make(f.ring(), Window{m, f.window().hi}, std::move(terms));
}

Series shift(const Series& f, Exp delta) {
  std::vector<Series::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) terms.push_back({e + delta, c});
  Window w{satAddLo(f.window().lo, delta), satAdd(f.window().hi, delta)};
  return Series::make(f.ring(), w, std::move(terms));
}

Series promote(const Series& f, Ring target) {
  std::vector<Series::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) terms.push_back({e, c.promote(target)});
  return Series::make(target, f.window(), std::move(terms));
}

bool equalOnWindow(const Series& a, const Series& b, Window w) {
  require(a.ring() == b.ring(), Err::RingMismatch, "comparing series over different rings");
  require(w.hi <= a.window().hi && w.hi <= b.window().hi, Err::WindowError,
          "comparison window exceeds a known window");
  for (const auto& [e, c] : a.terms())
    if (e >= w.lo && e <= w.hi && !(b.coeffOr0(e) == c)) return false;
  for (const auto& [e, c] : b.terms())
    if (e >= w.lo && e <= w.hi && !(a.coeffOr0(e) == c)) return false;
  return true;
}

namespace detail {

Series addSharp(const Series& f, const Series& g) {
  require(f.ring() == g.ring(), Err::RingMismatch, "sum of series over different rings");
  Window w{std::min(f.window().lo, g.window().lo), std::min(f.window().hi, g.window().hi)};
  require(w.lo <= w.hi, Err::WindowError, "no verified window for the sum");
  std::vector<Series::Term> terms;
  for (const auto& t : f.terms())
    if (t.first <= w.hi) terms.push_back(t);
  for (const auto& t : g.terms())
    if (t.first <= w.hi) terms.push_back(t);
  return Series::make(f.ring(), w, std::move(terms));
}

Series mulSharp(const Series& f, const Series& g) {
  Window w{satAddLo(f.window().lo, g.window().lo),
           std::min(satAdd(f.supportFloor(), g.window().hi),
                    satAdd(f.window().hi, g.supportFloor()))};
  return mulWithWindow(f, g, w);
}

namespace {

// Falling-factorial multinomial a(a-1)...(a-j-l+1)/(j! l!), the coefficient
// of wn^j wp^l in (1 + wn + wp)^a.
Rat multinom(const Rat& a, int j, long l) {
  Rat r = 1;
  for (long i = 0; i < j + l; ++i) r *= (a - Rat(i));
  return r / (Rat::factorial(j) * Rat::factorial(l));
}

// Least exponent whose coefficient survives multiplication by an eps-grade
// budget; +inf when the whole layer dies.
Exp cappedFloor(const Series& s, int gradeCap) {
  for (const auto& [e, c] : s.terms())
    if (c.minEpsGrade() <= gradeCap) return e;
  return kInfHi;
}

// Shared expansion state for powers of one substitution target.
class BinomKit {
 public:
  explicit BinomKit(const Series& w) : ring_(w.ring()), whi_(w.window().hi) {
    std::vector<Series::Term> wnT, wpT;
    for (const auto& t : w.terms()) {
      require(t.first != 0, Err::DomainError, "internal: constant term in 1 + w expansion");
      if (t.first < 0) {
        require(t.second.isNilpotent(), Err::InvalidSubstitution,
                "non-nilpotent coefficient in negative degree");
        wnT.push_back(t);
      } else {
        wpT.push_back(t);
      }
    }
    const Exp wnLo = wnT.empty() ? 0 : wnT.front().first;
    Series wn = Series::make(ring_, Window{wnLo, kInfHi}, std::move(wnT));
    wnP_.push_back(Series::monomial(ring_, 0, Scalar(ring_, 1)));
    for (int j = 1; j < ring_.eps; ++j) {
      Series next = mulSharp(wnP_.back(), wn);
      if (next.isZeroOnWindow()) break;
      wnP_.push_back(std::move(next));
    }
    if (!wpT.empty()) {
      wpFloor_ = wpT.front().first;
      wp_.emplace(Series::make(ring_, Window{1, whi_}, std::move(wpT)));
    } else {
      wpFloor_ = satAdd(whi_, 1);
    }
    minJFloor_ = 0;
    for (const auto& p : wnP_) minJFloor_ = std::min(minJFloor_, p.supportFloor());
  }

  Exp minFloor() const { return minJFloor_; }

  // (1 + w)^alpha, correct modulo terms that die against a multiplier of
  // eps-grade outerGrade: layers wn^j with j + outerGrade >= eps order are
  // skipped, which also lifts the knowledge ceiling they would impose.
  Series power(const Rat& alpha, int outerGrade = 0) {
    const bool nonnegInt = alpha.isInteger() && !alpha.isNegative();
    const long aInt = nonnegInt ? alpha.raw().get_num().get_si() : -1;
    const long jmax =
        std::min<long>(long(wnP_.size()) - 1, std::max(0, ring_.eps - 1 - outerGrade));
    // Knowledge ceiling: each surviving nilpotent layer that can pair with
    // the unknown region above whi caps the result there.
    Exp hi = kInfHi;
    if (!isInfExp(whi_)) {
      for (long j = 0; j <= jmax; ++j) {
        const bool couples = nonnegInt ? (j <= aInt - 1) : true;
        if (!couples) continue;
        const Exp fl = cappedFloor(wnP_[j], ring_.eps - 1 - outerGrade);
        if (!isInfExp(fl)) hi = std::min(hi, satAdd(fl, whi_));
      }
    } else if (wp_ && !nonnegInt) {
      fail(Err::WindowError, "expansion of an exactly-known series needs a finite window");
    }
    Exp lo = 0;
    for (long j = 0; j <= jmax; ++j) lo = std::min(lo, wnP_[j].supportFloor());
    require(lo <= hi, Err::WindowError, "no verified window for the expansion");

    long lmax = 0;
    if (wp_) {
      if (isInfExp(hi)) {
        lmax = aInt;  // finite binomial expansion of an exact polynomial
      } else {
        lmax = (hi - lo) / wpFloor_;
        if (nonnegInt) lmax = std::min(lmax, aInt);
      }
    }
    while (long(wpP_.size()) <= lmax) {
      if (wpP_.empty())
        wpP_.push_back(Series::monomial(ring_, 0, Scalar(ring_, 1)));
      else
        wpP_.push_back(mulSharp(wpP_.back(), *wp_));
    }
    if (wpP_.empty()) wpP_.push_back(Series::monomial(ring_, 0, Scalar(ring_, 1)));

    // Accumulate raw stored-by-stored products: clipping wn^j * wp^l at the
    // unrelaxed product window would drop terms that stay alive under the
    // grade-capped ceiling. Dead-grade pairs vanish in the scalar product.
    std::map<Exp, Scalar> acc;
    for (long j = 0; j <= jmax; ++j) {
      for (long l = 0; l <= lmax; ++l) {
        if (nonnegInt && j + l > aInt) break;
        const Rat m = multinom(alpha, int(j), l);
        if (m.isZero()) continue;
        for (const auto& [ea, ca] : wnP_[j].terms()) {
          if (ca.minEpsGrade() + outerGrade >= ring_.eps) continue;
          for (const auto& [eb, cb] : wpP_[l].terms()) {
            const Exp e = ea + eb;
            if (e > hi) continue;
            Scalar c = ca * cb;
            if (c.isZero()) continue;
            auto it = acc.try_emplace(e, ring_).first;
            it->second += c.mulRat(m);
          }
        }
      }
    }
    std::vector<Series::Term> terms(acc.begin(), acc.end());
    return Series::make(ring_, Window{lo, hi}, std::move(terms));
  }

 private:
  Ring ring_;
  Exp whi_;
  std::optional<Series> wp_;
  Exp wpFloor_ = 0;
  Exp minJFloor_ = 0;
  std::vector<Series> wnP_;
  std::vector<Series> wpP_;
};

// Substitution-shape validation shared by compose/reversion/sqrt: on the
// lattice with the given step, g = unit * v + nilpotent terms below v + any
// terms above, with the unit coefficient inside the window.
void validateSubstitution(const Series& g, Exp step) {
  require(g.window().lo <= step && step <= g.window().hi, Err::InvalidSubstitution,
          "window does not reach the linear coefficient");
  for (const auto& [e, c] : g.terms()) {
    require(e % step == 0, Err::InvalidSubstitution, "exponent off the substitution lattice");
    if (e <= 0)
      require(c.isNilpotent(), Err::InvalidSubstitution,
              "non-nilpotent coefficient at exponent " + std::to_string(e) + "/2");
  }
  const Scalar* u = g.find(step);
  require(u != nullptr && u->isUnit(), Err::InvalidSubstitution,
          "linear coefficient is not a unit");
}

// g = u*v*(1 + w); returns w with the constant term stripped.
Series substitutionRemainder(const Series& g, Exp step, const Scalar& unitInv) {
  Series q = scalarMul(unitInv, shift(g, -step));
  std::vector<Series::Term> terms;
  for (const auto& t : q.terms()) {
    if (t.first == 0) {
      require(t.second.isOne(), Err::DomainError, "internal: unit normalization failed");
      continue;
    }
    terms.push_back(t);
  }
  return Series::make(q.ring(), q.window(), std::move(terms));
}

Series epsSliceSeries(const Series& f, int j) {
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    Scalar s = c.epsSlice(j);
    if (!s.isZero()) terms.push_back({e, std::move(s)});
  }
  return Series::make(f.ring(), f.window(), std::move(terms));
}

Series latticeDerivative(const Series& f, Exp step) {
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    terms.push_back({e - step, c.mulRat(Rat(e / step))});
  }
  Window w{satAddLo(f.window().lo, -step), satAdd(f.window().hi, -step)};
  return Series::make(f.ring(), w, std::move(terms));
}

}  // namespace

Series onePlusPow(const Series& w, const Rat& alpha) { return BinomKit(w).power(alpha); }

Series composeStep(const Series& f, const Series& g, Exp step) {
  require(f.ring() == g.ring(), Err::RingMismatch, "composition of series over different rings");
  validateSubstitution(g, step);
  for (const auto& [e, c] : f.terms())
    require(e % step == 0, Err::InvalidSubstitution,
            "outer series has a fractional power of the substitution target");

  const Scalar u = *g.find(step);
  const Scalar uInv = u.inverse();
  BinomKit kit(substitutionRemainder(g, step, uInv));

  Exp tailHi = kInfHi;
  if (!isInfExp(f.window().hi)) {
    const long mTop = ceilDiv(f.window().hi + 1, step);
    tailHi = satAdd(mTop * step, kit.minFloor()) - 1;
  }

  Exp lo = std::min<Exp>(tailHi, 0);
  Exp hi = tailHi;
  std::map<Exp, Scalar> acc;
  std::vector<Series> pieces;
  pieces.reserve(f.terms().size());
  for (const auto& [d, fd] : f.terms()) {
    const long m = d / step;
    Series p = kit.power(Rat(m), fd.minEpsGrade());
    Series piece = shift(scalarMul(fd * u.pow(m), p), m * step);
    lo = std::min(lo, piece.window().lo);
    hi = std::min(hi, piece.window().hi);
    pieces.push_back(std::move(piece));
  }
  require(lo <= hi, Err::WindowError, "no verified window for the composition");
  for (const auto& piece : pieces) {
    for (const auto& [e, c] : piece.terms()) {
      if (e > hi) continue;
      auto it = acc.try_emplace(e, f.ring()).first;
      it->second += c;
    }
  }
  std::vector<Series::Term> terms(acc.begin(), acc.end());
  return Series::make(f.ring(), Window{lo, hi}, std::move(terms));
}

Series reversionStep(const Series& g, Exp step) {
  validateSubstitution(g, step);
  const Ring ring = g.ring();
  Series g0 = epsSliceSeries(g, 0);

  Series h = [&] {
    if (isInfExp(g0.window().hi)) {
      require(g0.terms().size() == 1, Err::WindowError,
              "reversion of an exactly-known non-monomial needs a finite window");
      return Series::monomial(ring, step, g0.find(step)->inverse());
    }
    const long K = g0.window().hi / step;
    std::vector<Scalar> a(K + 1, Scalar(ring));
    for (long k = 1; k <= K; ++k) a[k] = g0.coeffOr0(k * step);
    const Scalar a1Inv = a[1].inverse();
    std::vector<Scalar> b(K + 1, Scalar(ring));
    b[1] = a1Inv;
    for (long m = 2; m <= K; ++m) {
      // [v^m] of sum_k a_k h^k with h known below degree m.
      std::vector<Scalar> hp(K + 1, Scalar(ring));
      hp[0] = Scalar(ring, 1);
      Scalar defect(ring);
      for (long k = 1; k <= K; ++k) {
        std::vector<Scalar> next(K + 1, Scalar(ring));
        for (long i = 0; i <= K; ++i) {
          if (hp[i].isZero()) continue;
          for (long s = 1; s + i <= K; ++s) {
            if (b[s].isZero()) continue;
            next[i + s] += hp[i] * b[s];
          }
        }
        hp = std::move(next);
        if (!a[k].isZero()) defect += a[k] * hp[m];
      }
      b[m] = -(defect * a1Inv);
    }
    std::vector<Series::Term> terms;
    for (long mIdx = 1; mIdx <= K; ++mIdx)
      if (!b[mIdx].isZero()) terms.push_back({mIdx * step, b[mIdx]});
    return Series::make(ring, Window{step, K * step}, std::move(terms));
  }();

  if (ring.eps > 1) {
    Series dg0 = latticeDerivative(g0, step);
    Series dgh = composeStep(dg0, h, step);
    Series dgInv = mulInverse(dgh);
    Series ident = Series::monomial(ring, step, Scalar(ring, 1), Window{step, kInfHi});
    for (int j = 1; j < ring.eps; ++j) {
      Series defect = addSharp(composeStep(g, h, step), neg(ident));
      Series dj = epsSliceSeries(defect, j);
      if (dj.isZeroOnWindow()) continue;
      Series eta = neg(mulSharp(dj, dgInv));
      h = addSharp(h, eta);
    }
  }
  return h;
}

}  // namespace detail

Series compose(const Series& f, const Series& g) { return detail::composeStep(f, g, 2); }
Series composeOdd(const Series& f, const Series& g) { return detail::composeStep(f, g, 1); }
Series reversion(const Series& g) { return detail::reversionStep(g, 2); }
Series reversionOdd(const Series& g) { return detail::reversionStep(g, 1); }

Series mulInverse(const Series& f) {
  const Scalar* lead = nullptr;
  Exp m0 = 0;
  for (const auto& [e, c] : f.terms()) {
    if (!c.isNilpotent()) {
      lead = &c;
      m0 = e;
      break;
    }
  }
  require(lead != nullptr, Err::NotInvertible, "no non-nilpotent coefficient in the window");
  require(lead->isUnit(), Err::NotInvertible, "leading non-nilpotent coefficient is not a unit");
  const Scalar cInv = lead->inverse();
  Series q = scalarMul(cInv, shift(f, -m0));
  std::vector<Series::Term> terms;
  for (const auto& t : q.terms()) {
    if (t.first == 0) continue;  // the normalized leading 1
    terms.push_back(t);
  }
  Series w = Series::make(q.ring(), q.window(), std::move(terms));
  return shift(scalarMul(cInv, detail::onePlusPow(w, Rat(-1))), -m0);
}

Series sqrtOdd(const Series& g) {
  detail::validateSubstitution(g, 2);
  const Scalar u = *g.find(2);
  auto root = u.sqrtUnit();
  require(root.has_value(), Err::LeadingNotASquare,
          "leading coefficient has no representable square root");
  Series w = detail::substitutionRemainder(g, 2, u.inverse());
  return shift(scalarMul(*root, detail::onePlusPow(w, Rat(1, 2))), 1);
}

}  // namespace tate
