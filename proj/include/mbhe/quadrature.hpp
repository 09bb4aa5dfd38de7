#pragma once

// Gauss rules via Golub-Welsch (Eigen's symmetric tridiagonal eigensolver) and
// a high-precision Gauss-Legendre builder (Newton refinement of the double
// nodes).  Panel helpers for composite integration.

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "mbhe/precision.hpp"

namespace mbhe {

struct QuadRule {
  Eigen::VectorXd x, w;
  int size() const { return static_cast<int>(x.size()); }
};

// n-point Gauss-Legendre on [-1, 1]
QuadRule gauss_legendre(int n);

// n-point Gauss-Jacobi for  int_0^1 u^alpha f(u) du  (weight included in w)
QuadRule gauss_jacobi01(int n, double alpha);

// rule mapped to [a, b]
QuadRule mapped(const QuadRule& r, double a, double b);

// sum_i w_i f(x_i) over a rule already mapped to its interval
template <class F>
double apply(const QuadRule& r, F&& f) {
  double s = 0;
  for (int i = 0; i < r.size(); ++i) s += r.w[i] * f(r.x[i]);
  return s;
}

// composite Gauss-Legendre over [a, b] with npanel equal panels
template <class F>
double integrate(F&& f, double a, double b, int npts = 16, int npanel = 8) {
  QuadRule base = gauss_legendre(npts);
  double s = 0, h = (b - a) / npanel;
  for (int p = 0; p < npanel; ++p) {
    QuadRule r = mapped(base, a + p * h, a + (p + 1) * h);
    s += apply(r, f);
  }
  return s;
}

// panels refined geometrically toward the endpoint `sing` inside [a,b];
// integrates f over [a,b] assuming an integrable singularity at sing = a or b
template <class F>
double integrate_endpoint_singular(F&& f, double a, double b, bool sing_at_a,
                                   int npts = 16, int levels = 40) {
  QuadRule base = gauss_legendre(npts);
  double s = 0;
  double len = b - a;
  // geometric bisection toward the singular endpoint
  double hi = 1.0;
  for (int l = 0; l < levels; ++l) {
    double lo = (l + 1 == levels) ? 0.0 : hi / 2;
    double u0 = sing_at_a ? a + lo * len : b - hi * len;
    double u1 = sing_at_a ? a + hi * len : b - lo * len;
    s += apply(mapped(base, u0, u1), f);
    hi = lo;
  }
  return s;
}

// high-precision Gauss-Legendre on [-1,1] at the current Real precision
void gauss_legendre_mp(int n, std::vector<Real>& x, std::vector<Real>& w);

}  // namespace mbhe
