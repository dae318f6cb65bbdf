#pragma once

#include <map>
#include <string>
#include <vector>

#include "tate/series.hpp"

namespace tate {

// Truncated bivariate polynomial, total degree capped by the caller.
using Poly2 = std::map<std::pair<int, int>, Scalar>;

Poly2 poly2Mul(const Poly2& a, const Poly2& b, int degree, const Ring& ring);
// F(U, V) for bivariate arguments, truncated at the given total degree.
Poly2 poly2Substitute(const Poly2& f, const Poly2& u, const Poly2& v, int degree,
                      const Ring& ring);

// One-dimensional formal group law F(x, y), validated to a total degree
// bound at construction: F(x,0) = x, F(0,y) = y, F symmetric, and
// associativity F(F(x,y),z) = F(x,F(y,z)) up to the bound.
class Fgl {
 public:
  enum class Kind { Additive, Multiplicative, Custom };

  static Fgl additive(Ring r, int degree);
  static Fgl multiplicative(Ring r, const Scalar& beta, int degree);
  static Fgl custom(Ring r, Poly2 grid, int degree);

  Kind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const Poly2& grid() const { return grid_; }
  Scalar coeff(int i, int j) const;

  // d2 F(x, 0), the denominator of the invariant differential.
  Series partial2At0(int depth) const;
  // Invariant differential coefficient series 1 / d2F(x,0). The additive and
  // multiplicative laws are exact and extend to any requested depth; custom
  // grids stop at degree-1.
  Series invariantDifferential(int depth) const;
  // [-1]-series i(e) with F(e, i(e)) = 0; i = -e + higher.
  Series formalInverse(int depth) const;

 private:
  Fgl(Kind k, Ring r, Poly2 g, int degree, Scalar beta)
      : kind_(k), ring_(r), grid_(std::move(g)), degree_(degree), beta_(beta) {}
  void validate() const;

  Kind kind_;
  Ring ring_;
  Poly2 grid_;
  int degree_;
  Scalar beta_;
};

// The Tate module of a circle action for a complex-oriented theory: Laurent
// series in the Euler class over the law's ring, with the residue pairing.
struct TateModule {
  Fgl fgl;
  Window win;
};

TateModule makeTate(Fgl fgl, Window win);
// e^j as a series usable in the module's pipelines (requires j inside win).
Series tateMonomial(const TateModule& t, long j);

// b_k = res(e^k f dlog) for k = 0..kmax; b_0 is the boundary residue.
std::vector<Scalar> boundaryCoefficients(const TateModule& t, const Series& f, int kmax);
// (f, g) = res(f g de).
Scalar tatePairing(const TateModule& t, const Series& f, const Series& g);
// I(f) = f composed with the [-1]-series.
Series tateInvolutionApply(const TateModule& t, const Series& f);
// {f, g} = (I(f), g).
Scalar tateSymplectic(const TateModule& t, const Series& f, const Series& g);

enum class FormKind { Pairing, Symplectic };
// M[j][k] = form(e^j, e^k) for j, k in [jlo, jhi].
std::vector<std::vector<Scalar>> gramMatrix(const TateModule& t, FormKind form, long jlo,
                                            long jhi);

// Exact rank over Q; every entry must be a plain rational.
int rationalRank(std::vector<std::vector<Scalar>> m);

}  // namespace tate
