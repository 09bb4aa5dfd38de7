#include "mbhe/special.hpp"

#include <cmath>

#include "mbhe/errors.hpp"

namespace mbhe {

double bessel_j(double nu, double x) {
  if (x < 0 || nu <= -1) throw DomainError("bessel_j: nu > -1, x >= 0 required");
  if (x == 0) return nu == 0 ? 1.0 : 0.0;
  int digits = 20 + static_cast<int>(0.9 * x);
  ScopedPrecision prec(digits);
  Real h = Real(x) / 2, h2 = h * h;
  Real term = exp(Real(nu) * log(h) - log_gamma_real(Real(nu) + 1));
  Real sum = 0;
  for (int m = 0; m < 100000; ++m) {
    sum += term;
    Real next = -term * h2 / ((m + 1) * (Real(nu) + m + 1));
    if (abs(next) < abs(sum + Real(1e-300)) * pow(Real(10), -digits + 2) &&
        abs(next) < pow(Real(10), -digits))
      break;
    term = next;
    if (m + 1 == 100000) throw NonConvergence("bessel_j series");
  }
  return static_cast<double>(sum);
}

std::pair<std::complex<double>, std::complex<double>> airy(std::complex<double> zeta) {
  double az = std::abs(zeta);
  int digits = 25 + static_cast<int>(0.6 * std::pow(az, 1.5));
  ScopedPrecision prec(digits);
  Real third = Real(1) / 3;
  Real c1 = pow(Real(3), -Real(2) * third) / gamma_real(Real(2) * third);
  Real c2 = pow(Real(3), -third) / gamma_real(third);
  if (zeta == std::complex<double>(0, 0)) {
    return {std::complex<double>(static_cast<double>(c1), 0),
            std::complex<double>(-static_cast<double>(c2), 0)};
  }
  CReal z(zeta);
  CReal z3 = z * z * z;
  const Real tol = pow(Real(10), -digits + 3);

  // f = sum z^{3k} prod, f'' = z f, f(0)=1; g similar with g(0)=0, g'(0)=1
  CReal f(Real(1)), fp(Real(0)), g(Real(0)), gp(Real(1));
  {
    CReal t(Real(1));  // term of f: z^{3k} / prod
    for (int k = 0;; ++k) {
      CReal nt = t * z3 / Real((3 * k + 2) * (3 * k + 3));
      f += nt;
      fp += nt * Real(3 * (k + 1)) / z;  // derivative of z^{3k+3}: only valid z != 0
      t = nt;
      if (abs(nt) < tol * (abs(f) + Real(1))) break;
      if (k > 100000) throw NonConvergence("airy series f");
    }
  }
  {
    CReal t = z;  // term of g: z^{3k+1} / prod
    for (int k = 0;; ++k) {
      CReal nt = t * z3 / Real((3 * k + 3) * (3 * k + 4));
      g += nt;
      gp += nt * Real(3 * k + 4) / z;
      t = nt;
      if (abs(nt) < tol * (abs(g) + Real(1))) break;
      if (k > 100000) throw NonConvergence("airy series g");
    }
  }
  g += z;  // leading term of g (loop above starts at z^4)

  CReal ai = CReal(c1, Real(0)) * f - CReal(c2, Real(0)) * g;
  CReal aip = CReal(c1, Real(0)) * fp - CReal(c2, Real(0)) * gp;
  return {ai.to_double(), aip.to_double()};
}

}  // namespace mbhe
