#pragma once

#include <vector>

#include "tate/fgl.hpp"
#include "tate/series.hpp"

namespace tate {

// Finite-dimensional Hodge data driving the twisted involution: a diagonal
// integer grading H and a nilpotent rational matrix E raising it by 2
// (HE - EH = 2E). The half-integral conjugators e^{H/2} are kept formal:
// they only enter through integer powers of a unit t, so every identity is
// checked identically in t over Q[t, t^{-1}].
struct HodgeSpace {
  int dim;
  std::vector<long> grading;            // diagonal of H
  std::vector<std::vector<Rat>> chern;  // E
};

HodgeSpace makeSpace(std::vector<long> grading, std::vector<std::vector<Rat>> chern);

using VecSeries = std::vector<Series>;

// exp(sign * E) as an exact rational matrix (nilpotency makes it a polynomial).
std::vector<std::vector<Rat>> matrixExp(const HodgeSpace& space, int sign);

// The five factors applied right to left: t^{-H}, exp(E), the variable
// involution e -> -e, exp(-E), t^{H}. Components come back over the ring
// extended by t^{+-1}.
VecSeries twistedInvolution(const HodgeSpace& space, const VecSeries& f);

struct PolarizationReport {
  std::vector<std::vector<Scalar>> gram;  // basis (component, e^j), row-major
  bool antisymmetric;
  bool fullRank;
  bool nonnegIsotropic;
  bool negIsotropic;
};

// Gram matrix of {f, g} = (I_Giv f, g) with (f, g) = sum_a res(f_a g_a de)
// on the basis u_a e^j, j in [jlo, jhi], plus isotropy of the images of the
// degree-split halves under the conjugating factor t^H exp(-E).
PolarizationReport polarizationReport(const HodgeSpace& space, long jlo, long jhi);

}  // namespace tate
