#pragma once

// The rational-power map J_c(s) = c (s+1) ((s+1)/s)^{1/theta}, its two inverse
// branches, and the traced preimage curves of [0, b].

#include <complex>
#include <vector>

#include "mbhe/errors.hpp"

namespace mbhe {

using cplx = std::complex<double>;

struct GammaCurve;

struct ConformalMap {
  double c;
  double theta;

  double s_b() const { return 1.0 / theta; }
  double b() const { return c / theta * std::pow(1.0 + theta, 1.0 + 1.0 / theta); }

  // principal branch, analytic off [-1, 0], J ~ c s at infinity
  cplx J(cplx s) const;
  cplx Jp(cplx s) const;
  cplx Jpp(cplx s) const;

  // I_1: C \ [0,b] -> outside the closure of D
  cplx invert_outer(cplx z) const;
  // I_2: H_theta \ [0,b] -> D \ [-1,0]; needs the traced curve for seeding
  cplx invert_inner(cplx z, const GammaCurve& curve) const;

  // Newton refinement from a given seed
  cplx newton(cplx z, cplx seed) const;
};

struct GammaCurve {
  ConformalMap map;
  std::vector<double> x;      // ascending in [0, b]
  std::vector<cplx> s_plus;   // gamma_1 points, upper half-plane

  cplx I_plus(double xq) const;   // preimage on gamma_1 (Newton from nearest sample)
  cplx I_minus(double xq) const { return std::conj(I_plus(xq)); }

  // region D bounded by gamma_1 and its conjugate
  bool inside_D(cplx s) const;

  double max_roundtrip_residual() const;
};

GammaCurve trace_gamma(const ConformalMap& map, int grid_size);

}  // namespace mbhe
