#pragma once

// Reference-quality Bessel J and Airy evaluators (Maclaurin series at
// adaptively raised precision; cancellation absorbed by guard bits).

#include <complex>
#include <utility>

#include "mbhe/precision.hpp"

namespace mbhe {

// J_nu(x) for real nu > -1, x >= 0
double bessel_j(double nu, double x);

// (Ai, Ai') at complex zeta
std::pair<std::complex<double>, std::complex<double>> airy(std::complex<double> zeta);

}  // namespace mbhe
