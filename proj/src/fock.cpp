#include "tate/fock.hpp"

#include <algorithm>
#include <set>

#include "tate/kernels.hpp"

namespace tate {

FockVector FockVector::basis(FockMonomial m) {
  for (int r2 : m) require(r2 > 0 && r2 % 2 != 0, Err::DomainError, "modes are positive half-integers");
  std::sort(m.begin(), m.end());
  FockVector v;
  v.terms_.emplace(std::move(m), Rat(1));
  return v;
}

int FockVector::maxLevel2() const {
  int top = 0;
  for (const auto& [m, c] : terms_) {
    int lvl = 0;
    for (int r2 : m) lvl += r2;
    top = std::max(top, lvl);
  }
  return top;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

FockVector FockVector::mulRat(const Rat& c) const {
  FockVector out;
  if (c.isZero()) return out;
  for (const auto& [m, q] : terms_) out.terms_.emplace(m, q * c);
  return out;
}

void FockVector::add(const FockMonomial& m, const Rat& c) {
  if (c.isZero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

namespace {

void basisRec(int cap2, int minPart, FockMonomial& cur, std::vector<FockMonomial>& out) {
  out.push_back(cur);
  for (int r2 = minPart; r2 <= cap2; r2 += 2) {
    cur.push_back(r2);
    basisRec(cap2 - r2, r2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FockMonomial> fockBasis(int cap2) {
  std::vector<FockMonomial> out;
  FockMonomial cur;
  basisRec(cap2, 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

FockVector alphaApply(int r2, const FockVector& v) {
  require(r2 % 2 != 0, Err::DomainError, "modes are half-integers");
  FockVector out;
  if (r2 < 0) {
    // creation: append |r| to the monomial
    for (const auto& [m, c] : v.terms()) {
      FockMonomial next = m;
      next.insert(std::lower_bound(next.begin(), next.end(), -r2), -r2);
      out.add(next, c);
    }
    return out;
  }
  // annihilation: r * d/d(alpha_{-r}), i.e. multiplicity times the mode value
  for (const auto& [m, c] : v.terms()) {
    auto lo = std::lower_bound(m.begin(), m.end(), r2);
    if (lo == m.end() || *lo != r2) continue;
    auto hi = std::upper_bound(m.begin(), m.end(), r2);
    const long mult = hi - lo;
    FockMonomial next;
    next.reserve(m.size() - 1);
    next.insert(next.end(), m.begin(), lo);
    next.insert(next.end(), lo + 1, m.end());
    out.add(next, c * Rat(mult) * Rat(r2, 2));
  }
  return out;
}

namespace {

// :alpha_{s} alpha_{r}: applied to one-monomial vector; annihilators act
// first, which is exactly normal ordering for mixed pairs and immaterial
// for like pairs (they commute since s + r = 2k != 0 here, and for k = 0
// the caller never reaches this).
FockVector pairApply(int s2, int r2, const FockVector& v) {
  const int first = r2 > 0 ? r2 : s2;
  const int second = r2 > 0 ? s2 : r2;
  return alphaApply(second, alphaApply(first, v));
}

}  // namespace

FockVector virasoroApply(int k, const FockVector& v, const Rat& zeroPoint, int cap2) {
  FockVector out;
  if (k == 0) {
    for (const auto& [m, c] : v.terms()) {
      int lvl = 0;
      for (int r2 : m) lvl += r2;
      FockVector piece;
      piece.add(m, c * (Rat(lvl, 2) + zeroPoint));
      out = out + piece;
    }
    return out;
  }
  for (const auto& [m, c] : v.terms()) {
    int lvl = 0;
    for (int r2 : m) lvl += r2;
    if (lvl - 2 * k > cap2)
      fail(Err::LevelOverflow, "result level " + std::to_string(lvl / 2 - k) +
                                   " exceeds the cap " + std::to_string(cap2 / 2));
    FockVector mono;
    mono.add(m, c);
    // candidate r values: annihilators must hit modes present in the
    // monomial; double creations range over the finite interval (k, 0)
    std::set<int> cands;
    for (int r2 : m) {
      cands.insert(r2);           // r = r2/2 annihilates
      cands.insert(2 * k - r2);   // s = k - r annihilates, r = k - s creates
    }
    if (k < 0)
      for (int r2 = 2 * k + 1; r2 < 0; r2 += 2) cands.insert(r2);
    for (int r2 : cands) {
      const int s2 = 2 * k - r2;
      out = out + pairApply(s2, r2, mono).mulRat(Rat(1, 2));
    }
  }
  return out;
}

FockVector bracketDefect(int m, int n, const FockVector& v, const Rat& zeroPoint, int cap2) {
  // give the inner applications headroom so the commutator itself decides
  const int inner = cap2 + 2 * std::max({std::abs(m), std::abs(n), 1});
  FockVector lm = virasoroApply(m, virasoroApply(n, v, zeroPoint, inner), zeroPoint, inner);
  FockVector ln = virasoroApply(n, virasoroApply(m, v, zeroPoint, inner), zeroPoint, inner);
  FockVector mid = virasoroApply(m + n, v, zeroPoint, inner).mulRat(Rat(m - n));
  return lm - ln - mid;
}

ClosureReport subalgebraClosureReport(int kmin, int kmax, int levelCap2) {
  require(kmin <= kmax, Err::DomainError, "empty generator range");
  const auto basis = fockBasis(levelCap2);
  const int span = kmax - kmin + 1;
  const int nb = int(basis.size());
  // every (pair, basis vector) check is independent; flatten for balance and
  // AND-reduce per pair in index order
  auto flat = kernels::mapIndexed<bool>(span * span * nb, [&](int idx) {
    const int pairIdx = idx / nb;
    const int m = kmin + pairIdx / span, n = kmin + pairIdx % span;
    FockVector defect = bracketDefect(m, n, FockVector::basis(basis[idx % nb]), fockZeroPoint(),
                                      levelCap2 + 2 * (std::abs(m) + std::abs(n) + 2));
    return defect.isZero();
  });
  ClosureReport report{{}, true};
  for (int pairIdx = 0; pairIdx < span * span; ++pairIdx) {
    bool pass = true;
    for (int b = 0; b < nb; ++b) pass = pass && flat[pairIdx * nb + b];
    report.pairs.push_back({kmin + pairIdx / span, kmin + pairIdx % span, pass});
    report.allPass = report.allPass && pass;
  }
  return report;
}

Rat kwTrace(int k, const std::vector<Rat>& eigenvalues) {
  require(k >= 0, Err::DomainError, "trace index must be nonnegative");
  Rat sum(0);
  for (const Rat& lam : eigenvalues) {
    require(!lam.isNegative() && !lam.isZero(), Err::NonPositiveEigenvalue,
            "eigenvalues must be positive");
    sum += lam.pow(-(2 * k + 1));
  }
  return -(doubleFactorial(2 * k - 1) * sum);
}

Scalar kwGammaComparison(int k, const std::vector<Rat>& eigenvalues) {
  require(k >= 0, Err::DomainError, "index must be nonnegative");
  require(!eigenvalues.empty(), Err::DomainError, "empty eigenvalue list");
  // numerator: sum gamma_{-k-1/2}(lambda^2) = [sum lambda^{-2k-1}]/Gamma(1/2-k)
  Scalar gammaInv = gammaHalf(-2 * k - 1).inverse();
  Rat trace(0);
  for (const Rat& lam : eigenvalues) {
    require(!lam.isNegative() && !lam.isZero(), Err::NonPositiveEigenvalue,
            "eigenvalues must be positive");
    trace += lam.pow(-(2 * k + 1));
  }
  Scalar numerator = gammaInv.mulRat(trace);
  return numerator.mulRat(trace.inverse());
}

Rat schurQSingle(long k, const std::vector<Rat>& variables) {
  require(k >= 0, Err::DomainError, "negative index");
  // running product of (1 + x t)/(1 - x t) truncated at degree k
  std::vector<Rat> acc(k + 1, Rat(0));
  acc[0] = Rat(1);
  for (const Rat& x : variables) {
    // (1 + x t)(1 - x t)^{-1} = 1 + 2 sum_{j>=1} x^j t^j
    std::vector<Rat> factor(k + 1, Rat(0));
    factor[0] = Rat(1);
    Rat pw(1);
    for (long j = 1; j <= k; ++j) {
      pw *= x;
      factor[j] = Rat(2) * pw;
    }
    std::vector<Rat> next(k + 1, Rat(0));
    for (long i = 0; i <= k; ++i) {
      if (acc[i].isZero()) continue;
      for (long j = 0; i + j <= k; ++j) next[i + j] += acc[i] * factor[j];
    }
    acc = std::move(next);
  }
  return acc[k];
}

namespace {

// Q_{(a,b)} = q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i}; antisymmetric.
Rat schurQTwoRow(long a, long b, const std::vector<Rat>& vars) {
  if (a == b) return Rat(0);
  if (a < b) return -schurQTwoRow(b, a, vars);
  if (b < 0) return Rat(0);
  Rat out = schurQSingle(a, vars) * schurQSingle(b, vars);
  for (long i = 1; i <= b; ++i) {
    Rat term = Rat(2) * schurQSingle(a + i, vars) * schurQSingle(b - i, vars);
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

Rat pfaffian(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 2) return m[0][1];
  // expand along the first row
  Rat out(0);
  for (std::size_t j = 1; j < n; ++j) {
    if (m[0][j].isZero()) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      if (r == j) continue;
      std::vector<Rat> row;
      for (std::size_t c = 1; c < n; ++c) {
        if (c == j) continue;
        row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Rat term = m[0][j] * pfaffian(minor);
    out += (j % 2 != 0) ? term : -term;
  }
  return out;
}

}  // namespace

Rat schurQ(const std::vector<long>& lambda, const std::vector<Rat>& variables) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    require(lambda[i] > 0, Err::NotStrict, "parts must be positive");
    if (i + 1 < lambda.size())
      require(lambda[i] > lambda[i + 1], Err::NotStrict, "parts must strictly decrease");
  }
  if (lambda.empty()) return Rat(1);
  if (lambda.size() == 1) return schurQSingle(lambda[0], variables);
  if (lambda.size() == 2) return schurQTwoRow(lambda[0], lambda[1], variables);
  // Pfaffian of the two-row matrix, padding odd lengths with a zero part
  std::vector<long> parts = lambda;
  if (parts.size() % 2 != 0) parts.push_back(0);
  const std::size_t n = parts.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = parts[j] == 0 ? schurQSingle(parts[i], variables)
                            : schurQTwoRow(parts[i], parts[j], variables);
      m[i][j] = v;
      m[j][i] = -v;
    }
  return pfaffian(m);
}

}  // namespace tate
