#include "mbhe/gamma.hpp"

#include <cmath>

namespace mbhe {

// Spouge: Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} [c0 + sum_{k=1}^{a-1} c_k/(z+k)],
// relative error below a^{-1/2} (2 pi)^{-(a+1/2)} for Re z >= 0.
GammaContext::GammaContext(int digits10) : digits_(digits10) {
  a_ = static_cast<int>(1.2762 * digits10) + 6;
  pi_ = const_pi();
  coeff_.resize(a_);
  coeff_[0] = sqrt(2 * pi_);
  Real fact = 1;  // (k-1)!
  for (int k = 1; k < a_; ++k) {
    if (k > 1) fact *= (k - 1);
    Real ak = Real(a_ - k);
    coeff_[k] = ((k % 2) ? Real(1) : Real(-1)) * pow(ak, Real(k) - Real(0.5)) * exp(ak) / fact;
  }
}

CReal GammaContext::gamma_right(CReal z) const {
  CReal w = z - CReal(Real(1));
  CReal s(coeff_[0]);
  for (int k = 1; k < a_; ++k) s += CReal(coeff_[k]) / (w + CReal(Real(k)));
  CReal t = w + CReal(Real(a_));
  return exp(log(t) * (w + CReal(Real(0.5))) - t) * s;
}

CReal GammaContext::gamma(const CReal& z) const {
  if (z.im == Real(0)) {
    Real x = z.re;
    if (x == floor(x) && x <= Real(0)) return {Real(0), Real(0)};  // pole; caller guards
    return {gamma_real(x), Real(0)};
  }
  if (z.re >= Real(0.5)) return gamma_right(z);
  // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
  CReal spz = sin(CReal(pi_) * z);
  return CReal(pi_) / (spz * gamma_right(CReal(Real(1)) - z));
}

CReal GammaContext::log_sin_pi(const CReal& z) const { return log(sin(CReal(pi_) * z)); }

std::complex<double> cgamma(std::complex<double> z) {
  ScopedPrecision prec(25);
  GammaContext ctx(20);
  return ctx.gamma(CReal(z)).to_double();
}

}  // namespace mbhe
