#include "tate/fgl.hpp"

#include <algorithm>

#include "tate/kernels.hpp"

namespace tate {

Poly2 poly2Mul(const Poly2& a, const Poly2& b, int degree, const Ring& ring) {
  Poly2 out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const int i = ea.first + eb.first, j = ea.second + eb.second;
      if (i + j > degree) continue;
      Scalar prod = ca * cb;
      if (prod.isZero()) continue;
      auto it = out.try_emplace({i, j}, ring).first;
      it->second += prod;
      if (it->second.isZero()) out.erase(it);
    }
  }
  return out;
}

Poly2 poly2Substitute(const Poly2& f, const Poly2& u, const Poly2& v, int degree,
                      const Ring& ring) {
  // Cache powers of u and v up to the degree bound.
  std::vector<Poly2> up{{{{0, 0}, Scalar(ring, 1)}}}, vp{{{{0, 0}, Scalar(ring, 1)}}};
  for (int k = 1; k <= degree; ++k) {
    up.push_back(poly2Mul(up.back(), u, degree, ring));
    vp.push_back(poly2Mul(vp.back(), v, degree, ring));
  }
  Poly2 out;
  for (const auto& [e, c] : f) {
    if (e.first + e.second > degree) continue;
    Poly2 term = poly2Mul(up[e.first], vp[e.second], degree, ring);
    for (const auto& [te, tc] : term) {
      Scalar prod = tc * c;
      if (prod.isZero()) continue;
      auto it = out.try_emplace(te, ring).first;
      it->second += prod;
      if (it->second.isZero()) out.erase(it);
    }
  }
  return out;
}

namespace {

Poly2 varX(const Ring& r) { return {{{1, 0}, Scalar(r, 1)}}; }
Poly2 varY(const Ring& r) { return {{{0, 1}, Scalar(r, 1)}}; }

// Trivariate monomial map used for the associativity check.
using Poly3 = std::map<std::array<int, 3>, Scalar>;

Poly3 embed3(const Poly2& p, int xi, int yi, const Ring& ring, int degree) {
  // interprets p's two variables as positions xi and yi of a 3-variable poly
  Poly3 out;
  (void)ring;
  for (const auto& [e, c] : p) {
    std::array<int, 3> key{0, 0, 0};
    key[xi] = e.first;
    key[yi] = e.second;
    if (key[0] + key[1] + key[2] > degree) continue;
    out.insert_or_assign(key, c);
  }
  return out;
}

// F(p, q) where p and q are trivariate, truncated by total degree.
Poly3 substitute3(const Poly2& f, const Poly3& p, const Poly3& q, int degree, const Ring& ring) {
  auto mul3 = [&](const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::array<int, 3> key{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        if (key[0] + key[1] + key[2] > degree) continue;
        Scalar prod = ca * cb;
        if (prod.isZero()) continue;
        auto it = out.try_emplace(key, ring).first;
        it->second += prod;
        if (it->second.isZero()) out.erase(it);
      }
    return out;
  };
  std::vector<Poly3> pp{{{{0, 0, 0}, Scalar(ring, 1)}}}, qp{{{{0, 0, 0}, Scalar(ring, 1)}}};
  for (int k = 1; k <= degree; ++k) {
    pp.push_back(mul3(pp.back(), p));
    qp.push_back(mul3(qp.back(), q));
  }
  Poly3 out;
  for (const auto& [e, c] : f) {
    if (e.first + e.second > degree) continue;
    Poly3 term = mul3(pp[e.first], qp[e.second]);
    for (const auto& [te, tc] : term) {
      Scalar prod = tc * c;
      if (prod.isZero()) continue;
      auto it = out.try_emplace(te, ring).first;
      it->second += prod;
      if (it->second.isZero()) out.erase(it);
    }
  }
  return out;
}

}  // namespace

Fgl Fgl::additive(Ring r, int degree) {
  Poly2 g = {{{1, 0}, Scalar(r, 1)}, {{0, 1}, Scalar(r, 1)}};
  return Fgl(Kind::Additive, r, std::move(g), degree, Scalar(r));
}

Fgl Fgl::multiplicative(Ring r, const Scalar& beta, int degree) {
  Poly2 g = {{{1, 0}, Scalar(r, 1)}, {{0, 1}, Scalar(r, 1)}};
  if (!beta.isZero()) g.insert_or_assign({1, 1}, beta);
  return Fgl(Kind::Multiplicative, r, std::move(g), degree, beta);
}

Fgl Fgl::custom(Ring r, Poly2 grid, int degree) {
  std::erase_if(grid, [&](const auto& kv) { return kv.second.isZero(); });
  Fgl f(Kind::Custom, r, std::move(grid), degree, Scalar(r));
  f.validate();
  return f;
}

void Fgl::validate() const {
  // unit axioms: F(x,0) = x and F(0,y) = y
  for (const auto& [e, c] : grid_) {
    require(e.first + e.second <= degree_, Err::AxiomViolation,
            "grid entry beyond the degree bound");
    if (e.second == 0)
      require(e.first == 1 && c.isOne(), Err::AxiomViolation,
              "unit axiom fails: F(x,0) != x at degree " + std::to_string(e.first));
    if (e.first == 0)
      require(e.second == 1 && c.isOne(), Err::AxiomViolation,
              "unit axiom fails: F(0,y) != y at degree " + std::to_string(e.second));
  }
  require(coeff(1, 0).isOne() && coeff(0, 1).isOne(), Err::AxiomViolation,
          "unit axiom fails: missing linear terms");
  // commutativity
  for (const auto& [e, c] : grid_)
    require(coeff(e.second, e.first) == c, Err::AxiomViolation,
            "commutativity fails at (" + std::to_string(e.first) + "," +
                std::to_string(e.second) + ")");
  // associativity up to the degree bound
  const Poly3 x = embed3(varX(ring_), 0, 1, ring_, degree_);
  const Poly3 y = embed3(varY(ring_), 0, 1, ring_, degree_);
  const Poly3 z = embed3(varY(ring_), 0, 2, ring_, degree_);
  const Poly3 fxy = embed3(grid_, 0, 1, ring_, degree_);
  const Poly3 fyz = embed3(grid_, 1, 2, ring_, degree_);
  Poly3 lhs = substitute3(grid_, fxy, z, degree_, ring_);
  Poly3 rhs = substitute3(grid_, x, fyz, degree_, ring_);
  for (int d = 0; d <= degree_; ++d) {
    for (const auto& [e, c] : lhs) {
      if (e[0] + e[1] + e[2] != d) continue;
      auto it = rhs.find(e);
      require(it != rhs.end() && it->second == c, Err::AxiomViolation,
              "associativity fails at degree " + std::to_string(d));
    }
    for (const auto& [e, c] : rhs) {
      if (e[0] + e[1] + e[2] != d) continue;
      require(lhs.count(e) > 0, Err::AxiomViolation,
              "associativity fails at degree " + std::to_string(d));
    }
  }
}

Scalar Fgl::coeff(int i, int j) const {
  auto it = grid_.find({i, j});
  return it == grid_.end() ? Scalar(ring_) : it->second;
}

Series Fgl::partial2At0(int depth) const {
  switch (kind_) {
    case Kind::Additive:
      return Series::monomial(ring_, 0, Scalar(ring_, 1), Window{0, kInfHi});
    case Kind::Multiplicative: {
      std::vector<Series::Term> terms{{0, Scalar(ring_, 1)}};
      if (!beta_.isZero()) terms.push_back({2, beta_});
      return Series::fromTermsChecked(ring_, Window{0, kInfHi}, std::move(terms));
    }
    case Kind::Custom: {
      const int top = std::min(depth, degree_ - 1);
      std::vector<Series::Term> terms;
      for (int i = 0; i <= top; ++i) {
        Scalar c = coeff(i, 1);
        if (i == 0) c = Scalar(ring_, 1);
        if (!c.isZero()) terms.push_back({2 * i, c});
      }
      return Series::fromTermsChecked(ring_, Window{0, 2 * top}, std::move(terms));
    }
  }
  fail(Err::DomainError, "unreachable");
}

Series Fgl::invariantDifferential(int depth) const {
  if (kind_ == Kind::Additive)
    return Series::monomial(ring_, 0, Scalar(ring_, 1), Window{0, kInfHi});
  if (kind_ == Kind::Multiplicative) {
    // 1/(1 + beta e) expanded to the requested depth
    std::vector<Series::Term> terms;
    Scalar pow(ring_, 1);
    for (int i = 0; i <= depth; ++i) {
      if (!pow.isZero()) terms.push_back({2 * i, pow});
      pow = pow * (-beta_);
    }
    return Series::fromTermsChecked(ring_, Window{0, 2 * depth}, std::move(terms));
  }
  return mulInverse(partial2At0(depth));
}

Series Fgl::formalInverse(int depth) const {
  if (kind_ == Kind::Additive)
    return Series::monomial(ring_, 2, Scalar(ring_, -1), Window{2, kInfHi});
  if (kind_ == Kind::Multiplicative) {
    // -e/(1 + beta e)
    std::vector<Series::Term> terms;
    Scalar pow(ring_, -1);
    for (int i = 0; i < std::max(depth, 1); ++i) {
      if (!pow.isZero()) terms.push_back({2 * (i + 1), pow});
      pow = pow * (-beta_);
    }
    return Series::fromTermsChecked(ring_, Window{2, 2 * std::max(depth, 1)}, std::move(terms));
  }
  // term-by-term: F(e, i(e)) = 0, correcting one degree at a time
  const int top = degree_;
  std::vector<Scalar> inv(top + 1, Scalar(ring_));
  inv[1] = Scalar(ring_, -1);
  for (int d = 2; d <= top; ++d) {
    // evaluate F(e, S(e)) truncated at degree d with S known below degree d
    std::vector<Scalar> defect(top + 1, Scalar(ring_));
    std::vector<std::vector<Scalar>> spow;
    spow.push_back({Scalar(ring_, 1)});
    for (int k = 1; k <= d; ++k) {
      std::vector<Scalar> next(d + 1, Scalar(ring_));
      const std::vector<Scalar>& prev = spow.back();
      for (int a = 0; a <= d && a < int(prev.size()); ++a) {
        if (prev[a].isZero()) continue;
        for (int b = 1; a + b <= d; ++b) {
          if (inv[b].isZero()) continue;
          next[a + b] += prev[a] * inv[b];
        }
      }
      spow.push_back(std::move(next));
    }
    for (const auto& [e, c] : grid_) {
      const int m = e.first, n = e.second;
      if (m > d || n > d) continue;
      const std::vector<Scalar>& sp = spow[n];
      for (int a = 0; a < int(sp.size()); ++a) {
        if (sp[a].isZero()) continue;
        if (m + a <= d) defect[m + a] += c * sp[a];
      }
    }
    inv[d] = inv[d] - defect[d];
  }
  std::vector<Series::Term> terms;
  for (int d = 1; d <= top; ++d)
    if (!inv[d].isZero()) terms.push_back({2 * d, inv[d]});
  return Series::fromTermsChecked(ring_, Window{2, 2 * top}, std::move(terms));
}

TateModule makeTate(Fgl fgl, Window win) {
  require(win.lo < 0 && win.hi >= 0, Err::WindowError,
          "Tate window must straddle zero to carry the residue forms");
  return TateModule{std::move(fgl), win};
}

Series tateMonomial(const TateModule& t, long j) {
  require(2 * j >= t.win.lo && 2 * j <= t.win.hi, Err::WindowError,
          "monomial exponent outside the Tate window");
  return Series::monomial(t.fgl.ring(), 2 * j, Scalar(t.fgl.ring(), 1));
}

namespace {

// depth (in whole powers of e) that keeps the residue computable for data
// supported inside the module window
int workingDepth(const TateModule& t) {
  const long span = long((t.win.hi - t.win.lo) / 2);
  return int(span + std::max(t.fgl.degree(), 4) + 2);
}

}  // namespace

std::vector<Scalar> boundaryCoefficients(const TateModule& t, const Series& f, int kmax) {
  require(kmax >= 0, Err::DomainError, "kmax must be nonnegative");
  Series omega = t.fgl.invariantDifferential(workingDepth(t) + kmax);
  Series base = mul(promote(f, t.fgl.ring()), omega);
  std::vector<Scalar> out;
  out.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    out.push_back(residue(mul(Series::monomial(t.fgl.ring(), 2 * k, Scalar(t.fgl.ring(), 1)),
                              base)));
  return out;
}

Scalar tatePairing(const TateModule& t, const Series& f, const Series& g) {
  return residue(mul(promote(f, t.fgl.ring()), promote(g, t.fgl.ring())));
}

Series tateInvolutionApply(const TateModule& t, const Series& f) {
  Series inv = t.fgl.formalInverse(workingDepth(t));
  return compose(promote(f, t.fgl.ring()), inv);
}

Scalar tateSymplectic(const TateModule& t, const Series& f, const Series& g) {
  return residue(mul(tateInvolutionApply(t, f), promote(g, t.fgl.ring())));
}

std::vector<std::vector<Scalar>> gramMatrix(const TateModule& t, FormKind form, long jlo,
                                            long jhi) {
  if (jlo > jhi) return {};
  require(2 * jlo >= t.win.lo && 2 * jhi <= t.win.hi, Err::WindowError,
          "Gram range outside the Tate window");
  const int n = int(jhi - jlo + 1);
  return kernels::fillGrid<Scalar>(n, n, [&](int r, int c) {
    Series ej = tateMonomial(t, jlo + r);
    Series ek = tateMonomial(t, jlo + c);
    return form == FormKind::Pairing ? tatePairing(t, ej, ek) : tateSymplectic(t, ej, ek);
  });
}

int rationalRank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      for (const auto& [mono, c] : m[i][j].terms())
        require(mono == Mono{}, Err::DomainError, "rank needs plain rational entries");
      a[i][j] = m[i][j].rationalPart();
    }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col].isZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    const Rat inv = a[row][col].inverse();
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a[i][col].isZero()) continue;
      const Rat factor = a[i][col] * inv;
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace tate
