#include "mbhe/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "mbhe/errors.hpp"

namespace mbhe {

namespace {

QuadRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, double mu0) {
  int n = static_cast<int>(diag.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) T(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) T(i, i + 1) = T(i + 1, i) = subdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success) throw QuadratureFailure("Golub-Welsch eigensolve failed");
  QuadRule r;
  r.x = es.eigenvalues();
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace

QuadRule gauss_legendre(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), sub(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

QuadRule gauss_jacobi01(int n, double alpha) {
  if (alpha <= -1) throw DomainError("gauss_jacobi01 requires alpha > -1");
  // weight (1-x)^a (1+x)^b on [-1,1] with a = 0, b = alpha
  const double a = 0.0, b = alpha;
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  diag[0] = (b - a) / (a + b + 2);
  for (int k = 1; k < n; ++k) {
    double s = 2 * k + a + b;
    diag[k] = (b * b - a * a) / (s * (s + 2));
    double bk;
    if (k == 1)
      bk = 4 * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 2) * (a + b + 3));
    else
      bk = 4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
    sub[k - 1] = std::sqrt(bk);
  }
  double mu0 = std::pow(2.0, a + b + 1) * std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
  QuadRule r = golub_welsch(diag, sub, mu0);
  // map to [0,1]:  u = (1+x)/2,  int_0^1 u^alpha f du = 2^{-(alpha+1)} int (1+x)^alpha f dx
  for (int i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (1 + r.x[i]);
    r.w[i] *= std::pow(2.0, -(alpha + 1));
  }
  return r;
}

QuadRule mapped(const QuadRule& r, double a, double b) {
  QuadRule out;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  out.x = (r.x.array() * half + mid).matrix();
  out.w = r.w * half;
  return out;
}

void gauss_legendre_mp(int n, std::vector<Real>& x, std::vector<Real>& w) {
  QuadRule seed = gauss_legendre(n);
  x.assign(n, Real(0));
  w.assign(n, Real(0));
  for (int i = 0; i < n; ++i) {
    Real t = seed.x[i];
    Real pn, pd;
    for (int it = 0; it < 80; ++it) {
      // Legendre recurrence at t
      Real p0 = 1, p1 = t;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pn = p1;
      pd = n * (t * p1 - p0) / (t * t - 1);
      Real step = pn / pd;
      t -= step;
      if (abs(step) < abs(t) * pow(Real(10), -(int)Real::default_precision() + 2) + pow(Real(10), -(int)Real::default_precision())) break;
    }
    // recompute derivative at the converged node for the weight
    Real p0 = 1, p1 = t;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    Real dp = n * (t * p1 - p0) / (t * t - 1);
    x[i] = t;
    w[i] = 2 / ((1 - t * t) * dp * dp);
  }
}

}  // namespace mbhe
