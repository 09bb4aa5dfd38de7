#pragma once

// Evaluation of the three Meijer G-function families used by the model:
//
//   ThetaZero        G^{theta,0}_{0,theta+1}  b = ((a-t+1)/t, ..., a/t, k)
//   ThetaPlusOneZero G^{theta+1,0}_{0,theta+1} same b-list, all in the numerator
//   OneZero          G^{1,0}_{0,theta+1}      b = (k, -a/t, (1-a)/t, ..., (t-1-a)/t)
//
// Two independent routes: the residue series of the Mellin-Barnes integrand
// (entire-type series, summed at adaptively raised precision to absorb
// cancellation), and direct contour quadrature of the Mellin-Barnes integral.
// A leading-order large-argument form is available for residual tests only.
//
// Arguments are polar points with unrestricted phase so callers control the
// branch explicitly (zeta e^{+pi i} and zeta e^{-pi i} are distinct inputs).

#include <complex>
#include <vector>

#include "mbhe/errors.hpp"
#include "mbhe/precision.hpp"

namespace mbhe {

enum class GFamily { ThetaZero, ThetaPlusOneZero, OneZero };

struct MeijerGPattern {
  GFamily family;
  int theta;     // positive integer
  double alpha;  // > -1
  int k;         // trailing b-parameter, 0 <= k <= theta

  // numerator entries b (Gamma(u+b)) and denominator entries d (Gamma(1-d-u))
  std::vector<double> numerator() const;
  std::vector<double> denominator() const;
  // true when two numerator poles collide (integer alpha in the theta+1,0
  // family): the residue series would need logarithmic terms
  bool has_pole_collision() const;
};

enum class GMethod { ResidueSeries, MellinBarnes, LargeZetaAsymptotic };

struct EvalStrategy {
  GMethod method = GMethod::ResidueSeries;
  int series_terms = 20000;    // hard cap on terms per pole family
  double mb_truncation = 2.0;  // |Im u| where the contour starts to tilt
  int mb_nodes = 24;           // Gauss points per contour panel
  double switch_radius = 8.0;  // series/quadrature hand-off for pick()
  double tol = 1e-12;          // absolute-or-relative target

  // series below switch_radius, quadrature above or on pole collisions
  static EvalStrategy pick(const MeijerGPattern& p, double abs_zeta);
};

// high-precision evaluation; result carries the working precision
CReal meijer_g_mp(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s = {});

std::complex<double> meijer_g(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s = {});
std::complex<double> meijer_g(const MeijerGPattern& p, std::complex<double> zeta,
                              const EvalStrategy& s = {});

// |G^{t+1,0}(zeta e^{-pi i}) - G^{t+1,0}(zeta e^{pi i}) - (-1)^k 2 pi i G^{t,0}(zeta)|
// over the max modulus of the three terms
double meijer_jump_identity_residual(int theta, double alpha, int k, std::complex<double> zeta,
                                     const EvalStrategy& s = {});

// psi_k(w) = w^{theta-alpha-1} G^{theta,0}(w^theta), entire in w
CReal psi_k_mp(int theta, double alpha, int k, Phased w, const EvalStrategy& s = {});

}  // namespace mbhe
