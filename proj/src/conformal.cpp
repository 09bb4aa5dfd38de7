#include "mbhe/conformal.hpp"

#include <algorithm>
#include <cmath>

namespace mbhe {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool on_segment_minus1_0(cplx s) {
  return s.imag() == 0 && s.real() >= -1.0 && s.real() <= 0.0;
}
}  // namespace

cplx ConformalMap::J(cplx s) const {
  if (on_segment_minus1_0(s)) throw DomainError("J_c undefined on [-1,0]");
  return c * (s + 1.0) * std::pow((s + 1.0) / s, 1.0 / theta);
}

cplx ConformalMap::Jp(cplx s) const {
  // J'/J = (1 + 1/theta)/(s+1) - 1/(theta s)
  return J(s) * ((1.0 + 1.0 / theta) / (s + 1.0) - 1.0 / (theta * s));
}

cplx ConformalMap::Jpp(cplx s) const {
  cplx l = (1.0 + 1.0 / theta) / (s + 1.0) - 1.0 / (theta * s);
  cplx lp = -(1.0 + 1.0 / theta) / ((s + 1.0) * (s + 1.0)) + 1.0 / (theta * s * s);
  return J(s) * (l * l + lp);
}

cplx ConformalMap::newton(cplx z, cplx seed) const {
  cplx s = seed;
  double scale = std::abs(z) + b();
  double best = 1e300;
  cplx best_s = s;
  for (int it = 0; it < 80; ++it) {
    cplx f;
    try {
      f = J(s) - z;
    } catch (const DomainError&) {
      s += cplx(0, 1e-9);  // nudged off the cut
      continue;
    }
    double res = std::abs(f);
    if (res < best) {
      best = res;
      best_s = s;
    }
    if (res < 1e-13 * scale) return s;
    cplx d = Jp(s);
    if (std::abs(d) < 1e-290) {
      s += cplx(1e-8, 1e-8);
      continue;
    }
    cplx step = f / d;
    // damp huge steps
    double ms = std::abs(step);
    if (ms > 0.5 * (1.0 + std::abs(s))) step *= 0.5 * (1.0 + std::abs(s)) / ms;
    s -= step;
  }
  if (best < 1e-9 * scale) return best_s;
  throw NonConvergence("conformal map Newton inversion failed");
}

cplx ConformalMap::invert_outer(cplx z) const {
  double bb = b();
  if (z.imag() == 0 && z.real() >= 0 && z.real() <= bb)
    throw DomainError("invert_outer: z on [0,b]");
  auto seed_large = [&](cplx zz) { return zz / c - (1.0 + 1.0 / theta); };
  cplx s;
  if (std::abs(z) > 2.5 * bb) {
    s = newton(z, seed_large(z));
  } else if (std::abs(z - bb) < 0.25 * bb) {
    cplx root = std::sqrt(2.0 * (z - bb) / Jpp(s_b()));
    s = newton(z, s_b() + root);
  } else if (std::abs(z) < 0.15 * bb) {
    double sgn = z.imag() >= 0 ? 1.0 : -1.0;
    cplx root = std::pow(c, -theta / (1 + theta)) *
                std::polar(1.0, sgn * kPi / (1 + theta)) *
                std::pow(z, theta / (1 + theta));
    s = newton(z, -1.0 + root);
  } else {
    // continuation along the ray from 3b down to z
    cplx zfar = z * (3.0 * bb / std::abs(z));
    cplx sc = newton(zfar, seed_large(zfar));
    const int K = 24;
    for (int i = 1; i <= K; ++i) {
      cplx zt = zfar + (z - zfar) * (double(i) / K);
      sc = newton(zt, sc);
    }
    s = sc;
  }
  return s;
}

cplx ConformalMap::invert_inner(cplx z, const GammaCurve& curve) const {
  double bb = b();
  if (std::abs(std::arg(z)) >= kPi / theta && z != 0.0)
    throw DomainError("invert_inner: z outside H_theta");
  if (z.imag() == 0 && z.real() >= 0 && z.real() <= bb)
    throw DomainError("invert_inner: z on [0,b]");
  auto seed_large = [&](cplx zz) { return std::pow(c / zz, theta); };
  cplx s;
  if (std::abs(z) > 2.5 * bb) {
    s = newton(z, seed_large(z));
  } else if (std::abs(z - bb) < 0.25 * bb) {
    cplx root = std::sqrt(2.0 * (z - bb) / Jpp(s_b()));
    s = newton(z, s_b() - root);
  } else if (std::abs(z) < 0.15 * bb) {
    double sgn = z.imag() >= 0 ? 1.0 : -1.0;
    cplx root = std::pow(c, -theta / (1 + theta)) *
                std::polar(1.0, -sgn * kPi / (1 + theta)) *
                std::pow(z, theta / (1 + theta));
    s = newton(z, -1.0 + root);
  } else {
    cplx zfar = z * (3.0 * bb / std::abs(z));
    cplx sc = newton(zfar, seed_large(zfar));
    const int K = 24;
    for (int i = 1; i <= K; ++i) {
      cplx zt = zfar + (z - zfar) * (double(i) / K);
      sc = newton(zt, sc);
    }
    s = sc;
  }
  if (!curve.inside_D(s)) throw NonConvergence("invert_inner landed outside D");
  return s;
}

cplx GammaCurve::I_plus(double xq) const {
  double bb = map.b();
  if (xq <= 0) return cplx(-1.0, 0.0);
  if (xq >= bb) return cplx(map.s_b(), 0.0);
  auto it = std::lower_bound(x.begin(), x.end(), xq);
  size_t i = std::min<size_t>(std::distance(x.begin(), it), x.size() - 1);
  cplx seed = s_plus[i];
  if (std::abs(seed + 1.0) < 1e-12)
    seed = -1.0 + std::pow(map.c, -map.theta / (1 + map.theta)) *
                      std::polar(1.0, kPi / (1 + map.theta)) *
                      std::pow(xq, map.theta / (1 + map.theta));
  cplx s = map.newton(cplx(xq, 0.0), seed);
  if (s.imag() < 0) s = std::conj(s);
  return s;
}

bool GammaCurve::inside_D(cplx p) const {
  // even-odd ray crossing against the closed polyline gamma_1 + conj reversed
  auto cross = [&](cplx a, cplx b) {
    bool above_a = a.imag() > p.imag(), above_b = b.imag() > p.imag();
    if (above_a == above_b) return false;
    double t = (p.imag() - a.imag()) / (b.imag() - a.imag());
    return a.real() + t * (b.real() - a.real()) > p.real();
  };
  int hits = 0;
  size_t n = s_plus.size();
  for (size_t i = 0; i + 1 < n; ++i)
    if (cross(s_plus[i], s_plus[i + 1])) ++hits;
  for (size_t i = n; i > 1; --i)
    if (cross(std::conj(s_plus[i - 1]), std::conj(s_plus[i - 2]))) ++hits;
  // close the loop through the endpoints (they are real, so these segments are
  // degenerate unless p sits between the conjugate copies)
  if (cross(std::conj(s_plus[n - 1]), s_plus[n - 1])) ++hits;
  if (cross(s_plus[0], std::conj(s_plus[0]))) ++hits;
  return hits % 2 == 1;
}

double GammaCurve::max_roundtrip_residual() const {
  double worst = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || x[i] >= map.b()) continue;
    worst = std::max(worst, std::abs(map.J(s_plus[i]) - x[i]));
  }
  return worst;
}

GammaCurve trace_gamma(const ConformalMap& map, int grid_size) {
  if (grid_size < 8) throw DomainError("trace_gamma: grid_size >= 8 required");
  GammaCurve curve;
  curve.map = map;
  double bb = map.b();
  int m = grid_size;
  curve.x.resize(m);
  curve.s_plus.resize(m);
  for (int i = 0; i < m; ++i)
    curve.x[i] = bb * 0.5 * (1.0 - std::cos(kPi * i / (m - 1)));
  curve.x.front() = 0.0;
  curve.x.back() = bb;
  curve.s_plus.back() = cplx(map.s_b(), 0.0);
  curve.s_plus.front() = cplx(-1.0, 0.0);

  double jpp = map.Jpp(map.s_b()).real();
  cplx prev = curve.s_plus.back();
  for (int i = m - 2; i >= 1; --i) {
    double xq = curve.x[i];
    cplx seed;
    if (bb - xq < 0.05 * bb) {
      seed = map.s_b() + cplx(0.0, 1.0) * std::sqrt(2.0 * (bb - xq) / jpp);
    } else if (xq < 0.02 * bb) {
      seed = -1.0 + std::pow(map.c, -map.theta / (1 + map.theta)) *
                        std::polar(1.0, kPi / (1 + map.theta)) *
                        std::pow(xq, map.theta / (1 + map.theta));
    } else {
      cplx d = map.Jp(prev);
      seed = prev + (xq - curve.x[i + 1]) / d;
    }
    cplx s = map.newton(cplx(xq, 0.0), seed);
    if (s.imag() < 0) s = std::conj(s);
    curve.s_plus[i] = s;
    prev = s;
  }
  return curve;
}

}  // namespace mbhe
