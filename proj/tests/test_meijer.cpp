#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "mbhe/meijer.hpp"
#include "mbhe/special.hpp"

using namespace mbhe;

TEST_SUITE_BEGIN("meijer");

TEST_CASE("bessel special case at zeta = 1") {
  // G^{1,0}_{0,2}(-; 0, 0 | z) = J_0(2 sqrt z)
  MeijerGPattern p{GFamily::OneZero, 1, 0.0, 0};
  auto v = meijer_g(p, std::complex<double>(1.0, 0.0));
  CHECK(std::abs(v.real() - 0.2238907791412357) < 1e-11);
  CHECK(std::abs(v.imag()) < 1e-13);
}

TEST_CASE("zeta to zero limit") {
  MeijerGPattern p{GFamily::OneZero, 1, 0.0, 0};
  auto v = meijer_g(p, std::complex<double>(1e-12, 0.0));
  CHECK(std::abs(v.real() - 1.0) < 1e-10);
}

TEST_CASE("series matches quadrature, theta=2 alpha=0.5") {
  MeijerGPattern p{GFamily::ThetaZero, 2, 0.5, 0};
  EvalStrategy ser;
  ser.method = GMethod::ResidueSeries;
  EvalStrategy mb;
  mb.method = GMethod::MellinBarnes;
  mb.mb_nodes = 32;
  auto a = meijer_g(p, std::complex<double>(0.7, 0.0), ser);
  auto b = meijer_g(p, std::complex<double>(0.7, 0.0), mb);
  CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
}

TEST_CASE("series vs quadrature on random points near the switch radius") {
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> ua(-0.9, 2.0), uphase(-3.0, 3.0), ur(5.0, 10.0);
  std::uniform_int_distribution<int> uth(1, 3);
  for (GFamily fam : {GFamily::ThetaZero, GFamily::ThetaPlusOneZero, GFamily::OneZero}) {
    int count = 0;
    while (count < 50) {
      int theta = uth(rng);
      double alpha = ua(rng);
      if (std::abs(alpha - std::round(alpha)) < 0.05) continue;  // keep clear of log cases
      std::uniform_int_distribution<int> uk(0, theta);
      MeijerGPattern p{fam, theta, alpha, uk(rng)};
      Phased z{ur(rng), uphase(rng)};
      EvalStrategy ser;
      EvalStrategy mb;
      mb.method = GMethod::MellinBarnes;
      auto a = meijer_g(p, z, ser);
      auto b = meijer_g(p, z, mb);
      double scale = std::max(std::abs(a), std::abs(b));
      REQUIRE(scale > 0);
      CHECK(std::abs(a - b) / scale < 1e-8);
      ++count;
    }
  }
}

TEST_CASE("jump identity spec points") {
  CHECK(meijer_jump_identity_residual(1, 0.3, 0, {1.0, 0.5}) < 1e-9);
  CHECK(meijer_jump_identity_residual(2, -0.4, 1, {2.0, 0.0}) < 1e-9);
  CHECK(meijer_jump_identity_residual(3, 1.2, 3, {0.0, 0.5}) < 1e-9);
}

TEST_CASE("jump identity random sample") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(0.2, 9.0), uph(-2.9, 2.9);
  for (int theta = 1; theta <= 3; ++theta) {
    for (double alpha : {-0.35, 0.6, 1.45}) {
      for (int k = 0; k <= theta; ++k) {
        for (int i = 0; i < 20; ++i) {
          std::complex<double> z = std::polar(ur(rng), uph(rng));
          CHECK(meijer_jump_identity_residual(theta, alpha, k, z) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("bessel reduction for theta = 1") {
  // z^{-alpha/2} J_alpha(2 sqrt z) = G^{1,0}_{0,2}(-; 0, -alpha | z)
  for (double alpha : {0.0, 0.5}) {
    MeijerGPattern p{GFamily::OneZero, 1, alpha, 0};
    for (int i = 1; i <= 20; ++i) {
      double z = 0.5 * i;
      double ref = std::pow(z, -alpha / 2) * bessel_j(alpha, 2 * std::sqrt(z));
      auto v = meijer_g(p, std::complex<double>(z, 0.0));
      CHECK(std::abs(v.real() - ref) < 1e-10);
      CHECK(std::abs(v.imag()) < 1e-12);
    }
  }
}

TEST_CASE("entirety probe on a small circle") {
  // psi_k is entire: its DFT on a circle has no negative-frequency content
  const int M = 32;
  const double r = 0.03;
  for (int theta : {2, 3}) {
    std::vector<std::complex<double>> samples(M);
    for (int j = 0; j < M; ++j) {
      double ph = -M_PI + 2 * M_PI * (j + 0.5) / M;
      samples[j] = psi_k_mp(theta, 0.4, 1, Phased{r, ph}).to_double();
    }
    double pos = 0, neg = 0;
    for (int m = 1; m <= M / 2 - 1; ++m) {
      std::complex<double> cp = 0, cn = 0;
      for (int j = 0; j < M; ++j) {
        double ph = -M_PI + 2 * M_PI * (j + 0.5) / M;
        cp += samples[j] * std::polar(1.0, -m * ph);
        cn += samples[j] * std::polar(1.0, m * ph);
      }
      pos += std::norm(cp / double(M));
      neg += std::norm(cn / double(M));
    }
    CHECK(neg < 1e-20 * (pos + 1e-30));
  }
}

TEST_CASE("integer alpha refuses series and falls back to quadrature") {
  MeijerGPattern p{GFamily::ThetaPlusOneZero, 2, 1.0, 0};
  EvalStrategy ser;
  CHECK_THROWS_AS(meijer_g(p, std::complex<double>(1.0, 0.5), ser), DomainError);
  EvalStrategy mb;
  mb.method = GMethod::MellinBarnes;
  auto v = meijer_g(p, std::complex<double>(1.0, 0.5), mb);
  CHECK(std::isfinite(v.real()));
  CHECK(std::isfinite(v.imag()));
  // jump identity still closes with quadrature on the theta+1,0 side
  CHECK(meijer_jump_identity_residual(2, 1.0, 0, {1.3, 0.4}) < 1e-8);
  // auto pick routes collisions to quadrature
  CHECK(EvalStrategy::pick(p, 1.0).method == GMethod::MellinBarnes);
}

TEST_CASE("large zeta leading order") {
  EvalStrategy ser;
  EvalStrategy asym;
  asym.method = GMethod::LargeZetaAsymptotic;
  {
    MeijerGPattern p{GFamily::ThetaPlusOneZero, 1, 0.3, 0};
    Phased z{300.0, 0.4};
    auto a = meijer_g(p, z, ser);
    auto b = meijer_g(p, z, asym);
    CHECK(std::abs(a - b) < 0.15 * std::abs(a));
  }
  {
    MeijerGPattern p{GFamily::OneZero, 2, 0.5, 1};
    Phased z{500.0, 1.2};
    auto a = meijer_g(p, z, ser);
    auto b = meijer_g(p, z, asym);
    CHECK(std::abs(a - b) < 0.2 * std::abs(a));
  }
}

TEST_SUITE_END();
