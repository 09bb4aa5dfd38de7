#pragma once

// Complex gamma function at arbitrary precision (Spouge's expansion with the
// term count tied to the requested digits), plus a double-precision front end.
// The coefficient table is built per context, never shared, so concurrent
// evaluation needs no locking.

#include <complex>
#include <vector>

#include "mbhe/precision.hpp"

namespace mbhe {

class GammaContext {
 public:
  // digits10: target relative accuracy; the context is only valid while the
  // ambient Real precision is at least that many digits.
  explicit GammaContext(int digits10);

  CReal gamma(const CReal& z) const;
  CReal log_sin_pi(const CReal& z) const;  // helper exposed for tests

  int digits() const { return digits_; }

 private:
  CReal gamma_right(CReal z) const;  // Re z >= 0.5

  int digits_;
  int a_;
  std::vector<Real> coeff_;
  Real pi_;
};

std::complex<double> cgamma(std::complex<double> z);

}  // namespace mbhe
