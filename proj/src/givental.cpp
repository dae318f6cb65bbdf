#include "tate/givental.hpp"

namespace tate {

namespace {

const Ring kT = ringT();

std::vector<std::vector<Rat>> matMul(const std::vector<std::vector<Rat>>& a,
                                     const std::vector<std::vector<Rat>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].isZero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// component-wise variable involution e -> -e
Series involve(const Series& f) {
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    require(e % 2 == 0, Err::DomainError, "the involution acts on integer powers of e");
    terms.push_back({e, (e / 2) % 2 == 0 ? c : -c});
  }
  return Series::make(f.ring(), f.window(), std::move(terms));
}

VecSeries applyMatrix(const std::vector<std::vector<Rat>>& m, const VecSeries& f) {
  const std::size_t n = f.size();
  VecSeries out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Window w = f[0].window();
    for (const auto& g : f) {
      w.lo = std::max(w.lo, g.window().lo);
      w.hi = std::min(w.hi, g.window().hi);
    }
    Series acc = Series::zero(kT, w);
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].isZero()) continue;
      acc = add(acc, mulRat(m[i][j], f[j]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

VecSeries applyDiagT(const HodgeSpace& space, int sign, const VecSeries& f) {
  VecSeries out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Scalar tpow = Scalar::monomial(kT, Mono{0, 0, int(sign * space.grading[i])}, 1);
    out.push_back(scalarMul(tpow, f[i]));
  }
  return out;
}

}  // namespace

HodgeSpace makeSpace(std::vector<long> grading, std::vector<std::vector<Rat>> chern) {
  const int n = int(grading.size());
  require(n > 0, Err::DomainError, "empty space");
  require(int(chern.size()) == n, Err::DomainError, "E must be square of the grading size");
  for (const auto& row : chern)
    require(int(row.size()) == n, Err::DomainError, "E must be square");
  // nilpotency: E^n = 0
  std::vector<std::vector<Rat>> pw = chern;
  for (int k = 1; k < n; ++k) pw = matMul(pw, chern);
  for (const auto& row : pw)
    for (const Rat& v : row)
      require(v.isZero(), Err::NotNilpotent, "E is not nilpotent");
  // grading shift: (HE - EH)_{ij} = (h_i - h_j) E_{ij} must equal 2 E_{ij}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!chern[i][j].isZero())
        require(grading[i] - grading[j] == 2, Err::GradingMismatch,
                "E must raise the grading by exactly 2");
  return HodgeSpace{n, std::move(grading), std::move(chern)};
}

std::vector<std::vector<Rat>> matrixExp(const HodgeSpace& space, int sign) {
  const int n = space.dim;
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) out[i][i] = Rat(1);
  std::vector<std::vector<Rat>> pw = out;
  Rat fact(1);
  for (int k = 1; k < n; ++k) {
    pw = matMul(pw, space.chern);
    fact *= Rat(sign, k);
    bool any = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (pw[i][j].isZero()) continue;
        out[i][j] += fact * pw[i][j];
        any = true;
      }
    if (!any) break;
  }
  return out;
}

VecSeries twistedInvolution(const HodgeSpace& space, const VecSeries& f) {
  require(int(f.size()) == space.dim, Err::DomainError,
          "vector length must match the space dimension");
  VecSeries cur;
  cur.reserve(f.size());
  for (const Series& g : f)
    cur.push_back(g.ring() == kT ? g : promote(g, kT));
  cur = applyDiagT(space, -1, cur);
  cur = applyMatrix(matrixExp(space, +1), cur);
  for (Series& g : cur) g = involve(g);
  cur = applyMatrix(matrixExp(space, -1), cur);
  cur = applyDiagT(space, +1, cur);
  return cur;
}

PolarizationReport polarizationReport(const HodgeSpace& space, long jlo, long jhi) {
  require(jlo <= jhi, Err::DomainError, "empty exponent range");
  const int n = space.dim;
  const long width = jhi - jlo + 1;
  const int dim = int(n * width);

  auto basisVec = [&](int idx) {
    const int comp = idx / int(width);
    const long j = jlo + (idx % int(width));
    VecSeries v;
    for (int a = 0; a < n; ++a) {
      if (a == comp)
        v.push_back(Series::monomial(kT, 2 * j, Scalar(kT, 1)));
      else
        v.push_back(Series::zero(kT, Window{-kInfHi, kInfHi}));
    }
    return v;
  };
  auto pair = [&](const VecSeries& u, const VecSeries& v) {
    Scalar acc(kT);
    for (int a = 0; a < n; ++a) acc += residue(mul(u[a], v[a]));
    return acc;
  };

  PolarizationReport report;
  report.gram.reserve(dim);
  std::vector<VecSeries> twisted;
  twisted.reserve(dim);
  for (int i = 0; i < dim; ++i) twisted.push_back(twistedInvolution(space, basisVec(i)));
  for (int i = 0; i < dim; ++i) {
    std::vector<Scalar> row;
    row.reserve(dim);
    for (int j = 0; j < dim; ++j) row.push_back(pair(twisted[i], basisVec(j)));
    report.gram.push_back(std::move(row));
  }

  report.antisymmetric = true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!(report.gram[i][j] == -report.gram[j][i])) report.antisymmetric = false;

  // rank over Q(t): evaluate the unit t at rationals; full rank at any
  // evaluation forces full generic rank
  report.fullRank = false;
  for (const Rat& tval : {Rat(2), Rat(3, 2)}) {
    std::vector<std::vector<Scalar>> evaluated;
    evaluated.reserve(dim);
    for (const auto& row : report.gram) {
      std::vector<Scalar> r;
      r.reserve(dim);
      for (const Scalar& s : row) r.push_back(s.evalT(tval));
      evaluated.push_back(std::move(r));
    }
    if (rationalRank(evaluated) == dim) {
      report.fullRank = true;
      break;
    }
  }

  // isotropy of the images of the degree halves under A = t^H exp(-E):
  // {A u, A v} must vanish when u, v both sit in exponents >= 0 or both < 0
  auto twistedPair = [&](const VecSeries& u, const VecSeries& v) {
    VecSeries au = applyDiagT(space, +1, applyMatrix(matrixExp(space, -1), u));
    VecSeries av = applyDiagT(space, +1, applyMatrix(matrixExp(space, -1), v));
    return pair(twistedInvolution(space, au), av);
  };
  report.nonnegIsotropic = true;
  report.negIsotropic = true;
  for (int i = 0; i < dim; ++i) {
    const long ji = jlo + (i % int(width));
    for (int j = 0; j < dim; ++j) {
      const long jj = jlo + (j % int(width));
      if (ji >= 0 && jj >= 0) {
        if (!twistedPair(basisVec(i), basisVec(j)).isZero()) report.nonnegIsotropic = false;
      } else if (ji < 0 && jj < 0) {
        if (!twistedPair(basisVec(i), basisVec(j)).isZero()) report.negIsotropic = false;
      }
    }
  }
  return report;
}

}  // namespace tate
