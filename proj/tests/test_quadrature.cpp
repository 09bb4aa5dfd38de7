#include <doctest.h>

#include <cmath>

#include "mbhe/quadrature.hpp"

using namespace mbhe;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gauss legendre exactness") {
  QuadRule r = gauss_legendre(8);
  // exact for degree <= 15
  double s = 0;
  for (int i = 0; i < r.size(); ++i) s += r.w[i] * std::pow(r.x[i], 14);
  CHECK(std::abs(s - 2.0 / 15) < 1e-14);
  s = apply(mapped(r, 0, 1), [](double x) { return x * x; });
  CHECK(std::abs(s - 1.0 / 3) < 1e-14);
}

TEST_CASE("gauss jacobi weight u^alpha") {
  for (double a : {-0.5, 0.3, 1.7}) {
    QuadRule r = gauss_jacobi01(12, a);
    for (int k : {0, 1, 5, 9}) {
      double s = 0;
      for (int i = 0; i < r.size(); ++i) s += r.w[i] * std::pow(r.x[i], k);
      CHECK(std::abs(s - 1.0 / (a + k + 1)) < 1e-13 * (1.0 / (a + k + 1)));
    }
  }
}

TEST_CASE("endpoint singular integration") {
  // int_0^1 log(x) dx = -1
  double s = integrate_endpoint_singular([](double x) { return std::log(x); }, 0, 1, true);
  CHECK(std::abs(s + 1.0) < 1e-12);
  // int_0^1 x^{-1/2} dx = 2
  s = integrate_endpoint_singular([](double x) { return 1 / std::sqrt(x); }, 0, 1, true, 16, 60);
  CHECK(std::abs(s - 2.0) < 1e-9);
}

TEST_CASE("high precision legendre") {
  ScopedPrecision prec(60);
  std::vector<Real> x, w;
  gauss_legendre_mp(24, x, w);
  Real s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += w[i] * pow(x[i], 20);
  Real ref = Real(2) / 21;
  CHECK(static_cast<double>(abs(s - ref)) < 1e-55);
}

TEST_SUITE_END();
