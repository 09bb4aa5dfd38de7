#include "mbhe/meijer.hpp"

#include <algorithm>
#include <cmath>

#include "mbhe/gamma.hpp"
#include "mbhe/quadrature.hpp"

namespace mbhe {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

int out_digits(double tol) {
  double d = -std::log10(std::max(tol, 1e-300));
  return static_cast<int>(d) + 4;
}

// log10 of the worst-case term/result ratio: residue terms behave like
// r^n/(n!)^q, peaking near n = r^{1/q} with log(max term) ~ q r^{1/q}
double cancellation_digits(int q, double r, double phase) {
  double root = std::pow(std::max(r, 1e-300), 1.0 / q);
  return (2.2 * q * root + 2.0 * std::abs(phase)) * 0.4342944819 + 4;
}

struct FamilyLists {
  std::vector<Real> B;  // numerator b's: Gamma(u + b)
  std::vector<Real> D;  // denominator d's: Gamma(1 - d - u)
};

// parameter lists recomputed from alpha at the ambient precision
FamilyLists lift(const MeijerGPattern& p) {
  FamilyLists f;
  Real a(p.alpha), t(p.theta);
  switch (p.family) {
    case GFamily::ThetaZero:
      for (int l = 1; l <= p.theta; ++l) f.B.push_back((a - t + l) / t);
      f.D.push_back(Real(p.k));
      break;
    case GFamily::ThetaPlusOneZero:
      for (int l = 1; l <= p.theta; ++l) f.B.push_back((a - t + l) / t);
      f.B.push_back(Real(p.k));
      break;
    case GFamily::OneZero:
      f.B.push_back(Real(p.k));
      for (int l = 0; l < p.theta; ++l) f.D.push_back((l - a) / t);
      break;
  }
  return f;
}

// sum over numerator pole families of
//   T(j,n) = (-1)^n/n! prod_{i!=j} Gamma(b_i-b_j-n) / prod_d Gamma(1-d+b_j+n) zeta^{b_j+n}
CReal series_sum(const FamilyLists& f, Phased zeta, int max_terms, int stop_digits,
                 Real* max_term_out) {
  const Real logr = log(Real(zeta.r));
  const Real ph(zeta.phase);
  const CReal zc = exp(CReal(logr, ph));
  const Real stop_scale = pow(Real(10), -stop_digits);

  CReal total(Real(0), Real(0));
  Real max_term(0);

  const int m = static_cast<int>(f.B.size());
  for (int j = 0; j < m; ++j) {
    const Real& bj = f.B[j];
    CReal term = exp(CReal(bj * logr, bj * ph));
    for (int i = 0; i < m; ++i)
      if (i != j) term *= CReal(gamma_real(f.B[i] - bj), Real(0));
    for (const Real& d : f.D) term = term / CReal(gamma_real(1 - d + bj), Real(0));

    CReal partial(Real(0), Real(0));
    int quiet = 0;
    for (int n = 0;; ++n) {
      partial += term;
      Real mag = abs(term);
      if (mag > max_term) max_term = mag;
      if (mag < stop_scale * max_term) {
        if (++quiet >= 10) break;
      } else {
        quiet = 0;
      }
      if (n >= max_terms) throw NonConvergence("meijer residue series exceeded term budget");
      Real denom = Real(n + 1);
      for (int i = 0; i < m; ++i)
        if (i != j) denom *= (f.B[i] - bj - (n + 1));
      for (const Real& d : f.D) denom *= (1 - d + bj + n);
      term = term * zc / CReal(-denom, Real(0));
    }
    total += partial;
  }
  if (max_term_out) *max_term_out = max_term;
  return total;
}

CReal residue_series(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s) {
  if (p.has_pole_collision())
    throw DomainError(
        "residue series unavailable: numerator pole collision (integer alpha); use MellinBarnes");
  if (zeta.r <= 0) throw DomainError("meijer_g requires zeta != 0");
  const int od = out_digits(s.tol);
  double guard = cancellation_digits(p.theta + 1, zeta.r, zeta.phase);
  for (int attempt = 0; attempt < 3; ++attempt) {
    int digits = od + 12 + static_cast<int>(guard);
    ScopedPrecision prec(digits);
    FamilyLists f = lift(p);
    Real max_term;
    CReal v = series_sum(f, zeta, s.series_terms, od + 8, &max_term);
    Real floor_v = max_term * pow(Real(10), -(digits - od - 8));
    if (abs(v) > floor_v || max_term == Real(0)) return v;
    guard += od + 12;  // result buried below the cancellation floor: retry deeper
  }
  throw NonConvergence("meijer residue series: cancellation exceeded precision budget");
}

// Mellin-Barnes on a bent contour: vertical through sigma for |Im u| <= T0,
// then rays tilted into the left half-plane, where Gamma(u+b) decays like
// exp(-|u| log|u| sin(beta)) and the denominator gammas decay as well.
struct MBIntegrand {
  const FamilyLists& f;
  const GammaContext& ctx;
  CReal L;  // log zeta

  CReal operator()(const CReal& u) const {
    CReal val = exp(-(u * L));
    for (const Real& b : f.B) val *= ctx.gamma(u + CReal(b, Real(0)));
    for (const Real& d : f.D) val = val / ctx.gamma(CReal(Real(1) - d, Real(0)) - u);
    return val;
  }
};

CReal mb_segment(const MBIntegrand& fn, const CReal& a, const CReal& b, const QuadRule& rule,
                 Real* max_mag) {
  CReal mid = (a + b) * Real(0.5), half = (b - a) * Real(0.5);
  CReal acc(Real(0), Real(0));
  for (int i = 0; i < rule.size(); ++i) {
    CReal v = fn(mid + half * Real(rule.x[i])) * Real(rule.w[i]);
    acc += v;
    Real mag = abs(v) * abs(half);
    if (mag > *max_mag) *max_mag = mag;
  }
  return acc * half;
}

CReal mellin_barnes(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s) {
  if (zeta.r <= 0) throw DomainError("meijer_g requires zeta != 0");
  const int od = out_digits(s.tol);
  const int q = p.theta + 1;
  const QuadRule rule = gauss_legendre(s.mb_nodes);

  std::vector<double> bs = p.numerator();
  double sigma = 0.25 - *std::min_element(bs.begin(), bs.end());
  const double T0 = s.mb_truncation;
  const double beta = kPi / 4;

  double guard =
      (1.2 * q * std::pow(zeta.r, 1.0 / q) + (T0 + 2) * std::abs(zeta.phase)) * 0.4342944819 + 6;

  for (int attempt = 0; attempt < 3; ++attempt) {
    int digits = od + 12 + static_cast<int>(guard);
    ScopedPrecision prec(digits);
    GammaContext ctx(digits);
    FamilyLists f = lift(p);
    MBIntegrand fn{f, ctx, CReal(log(Real(zeta.r)), Real(zeta.phase))};

    Real max_mag(0);
    CReal acc(Real(0), Real(0));

    // vertical part, short panels (numerator poles sit 0.25 left of sigma)
    {
      int nv = std::max(8, static_cast<int>(2 * T0 / 0.5));
      for (int j = 0; j < nv; ++j) {
        double t0 = -T0 + 2 * T0 * j / nv, t1 = -T0 + 2 * T0 * (j + 1) / nv;
        acc += mb_segment(fn, CReal(Real(sigma), Real(t0)), CReal(Real(sigma), Real(t1)), rule,
                          &max_mag);
      }
    }

    // tilted rays; extend until the tail is negligible
    const CReal dir_up = CReal(Real(-std::sin(beta)), Real(std::cos(beta)));
    const CReal dir_dn = conj(dir_up);
    const CReal anc_up = CReal(Real(sigma), Real(T0));
    const CReal anc_dn = conj(anc_up);
    const double max_extent = 40 + 20 * q * std::pow(zeta.r, 1.0 / q) + 6 * std::abs(zeta.phase);
    const Real tail_tol = pow(Real(10), -(od + 8));

    double t = 0, step = 1.0;
    int calm = 0;
    while (t < max_extent) {
      CReal up = mb_segment(fn, anc_up + dir_up * Real(t), anc_up + dir_up * Real(t + step), rule,
                            &max_mag);
      // lower ray is traversed inward, from the far point toward the anchor
      CReal dn = mb_segment(fn, anc_dn + dir_dn * Real(t + step), anc_dn + dir_dn * Real(t), rule,
                            &max_mag);
      acc += up;
      acc += dn;
      Real contrib = abs(up) + abs(dn);
      Real scale = abs(acc) + max_mag * pow(Real(10), -(digits - od - 10));
      if (contrib < tail_tol * (scale + Real(1e-300))) {
        if (++calm >= 2) break;
      } else {
        calm = 0;
      }
      t += step;
      step *= 1.4;
    }
    if (t >= max_extent) throw NonConvergence("mellin_barnes: contour tail did not settle");

    acc = acc / CReal(Real(0), 2 * const_pi());  // 1/(2 pi i)
    Real floor_v = max_mag * pow(Real(10), -(digits - od - 8));
    if (abs(acc) > floor_v || max_mag == Real(0)) return acc;
    guard += od + 12;
  }
  throw NonConvergence("mellin_barnes: cancellation exceeded precision budget");
}

// leading-order large-argument forms (residual tests only)
CReal large_zeta(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s) {
  const int q = p.theta + 1;
  int digits = out_digits(s.tol) + 12 + static_cast<int>(1.2 * q * std::pow(zeta.r, 1.0 / q) * 0.44);
  ScopedPrecision prec(digits);
  const Real pi = const_pi();
  const CReal L(log(Real(zeta.r)), Real(zeta.phase));
  const CReal zroot = exp(L / Real(q));

  auto theta_plus_one = [&](Phased zz) {
    CReal Lz(log(Real(zz.r)), Real(zz.phase));
    Real nu = (Real(p.alpha) + p.k + Real(1.5)) / q - 1;
    Real pref = pow(2 * pi, Real(p.theta) / 2) / sqrt(Real(q));
    return CReal(pref, Real(0)) * exp(Lz * nu - CReal(Real(q), Real(0)) * exp(Lz / Real(q)));
  };

  switch (p.family) {
    case GFamily::ThetaPlusOneZero:
      return theta_plus_one(zeta);
    case GFamily::ThetaZero: {
      // via the jump relation from the theta+1,0 family on both sides of the cut
      CReal diff = theta_plus_one(zeta.rotated(-kPi)) - theta_plus_one(zeta.rotated(kPi));
      CReal fac = CReal(Real(0), 2 * pi);
      if (p.k % 2) fac = -fac;
      return diff / fac;
    }
    case GFamily::OneZero: {
      Real ex = (Real(p.k) - Real(p.alpha) - Real(0.5)) / q;
      Real pref = 1 / sqrt(Real(q) * pow(2 * pi, Real(p.theta)));
      if (p.k % 2) pref = -pref;
      Real ph = (Real(0.5) + Real(p.alpha) - p.k) * pi / q;
      CReal up = exp(CReal(Real(0), ph)) * exp(exp(CReal(Real(0), -pi / q)) * zroot * Real(q));
      CReal dn = exp(CReal(Real(0), -ph)) * exp(exp(CReal(Real(0), pi / q)) * zroot * Real(q));
      return CReal(pref, Real(0)) * exp(L * ex) * (up + dn);
    }
  }
  throw DomainError("unknown family");
}

}  // namespace

std::vector<double> MeijerGPattern::numerator() const {
  std::vector<double> b;
  switch (family) {
    case GFamily::ThetaZero:
    case GFamily::ThetaPlusOneZero:
      for (int l = 1; l <= theta; ++l) b.push_back((alpha - theta + l) / theta);
      if (family == GFamily::ThetaPlusOneZero) b.push_back(k);
      break;
    case GFamily::OneZero:
      b.push_back(k);
      break;
  }
  return b;
}

std::vector<double> MeijerGPattern::denominator() const {
  std::vector<double> d;
  switch (family) {
    case GFamily::ThetaZero:
      d.push_back(k);
      break;
    case GFamily::ThetaPlusOneZero:
      break;
    case GFamily::OneZero:
      for (int l = 0; l < theta; ++l) d.push_back((l - alpha) / theta);
      break;
  }
  return d;
}

bool MeijerGPattern::has_pole_collision() const {
  // the ladders -(alpha-theta+l)/theta - N and -k - N intersect iff alpha is an
  // integer; only the theta+1,0 family carries both
  return family == GFamily::ThetaPlusOneZero && near_integer(alpha);
}

EvalStrategy EvalStrategy::pick(const MeijerGPattern& p, double abs_zeta) {
  EvalStrategy s;
  if (p.has_pole_collision() || abs_zeta > s.switch_radius) s.method = GMethod::MellinBarnes;
  return s;
}

CReal meijer_g_mp(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s) {
  if (p.theta < 1 || p.alpha <= -1 || p.k < 0 || p.k > p.theta)
    throw DomainError("meijer_g: pattern out of range");
  switch (s.method) {
    case GMethod::ResidueSeries:
      return residue_series(p, zeta, s);
    case GMethod::MellinBarnes:
      return mellin_barnes(p, zeta, s);
    case GMethod::LargeZetaAsymptotic:
      return large_zeta(p, zeta, s);
  }
  throw DomainError("unknown method");
}

std::complex<double> meijer_g(const MeijerGPattern& p, Phased zeta, const EvalStrategy& s) {
  return meijer_g_mp(p, zeta, s).to_double();
}

std::complex<double> meijer_g(const MeijerGPattern& p, std::complex<double> zeta,
                              const EvalStrategy& s) {
  return meijer_g(p, Phased::from(zeta), s);
}

double meijer_jump_identity_residual(int theta, double alpha, int k, std::complex<double> zeta,
                                     const EvalStrategy& s) {
  Phased z = Phased::from(zeta);
  if (std::abs(std::abs(z.phase) - kPi) < 1e-14)
    throw DomainError("jump identity requires zeta off the negative axis");
  MeijerGPattern big{GFamily::ThetaPlusOneZero, theta, alpha, k};
  MeijerGPattern small{GFamily::ThetaZero, theta, alpha, k};
  EvalStrategy sb = s;
  if (big.has_pole_collision()) sb.method = GMethod::MellinBarnes;

  ScopedPrecision prec(out_digits(s.tol) + 12);
  CReal lhs_m = meijer_g_mp(big, z.rotated(-kPi), sb);
  CReal lhs_p = meijer_g_mp(big, z.rotated(kPi), sb);
  CReal rhs = meijer_g_mp(small, z, s);
  CReal two_pi_i(Real(0), 2 * const_pi());
  if (k % 2) two_pi_i = -two_pi_i;
  CReal num = lhs_m - lhs_p - two_pi_i * rhs;
  Real scale = std::max({abs(lhs_m), abs(lhs_p), abs(two_pi_i * rhs)});
  if (scale == Real(0)) return 0.0;
  return static_cast<double>(abs(num) / scale);
}

CReal psi_k_mp(int theta, double alpha, int k, Phased w, const EvalStrategy& s) {
  MeijerGPattern p{GFamily::ThetaZero, theta, alpha, k};
  CReal g = meijer_g_mp(p, w.power(theta), s);
  ScopedPrecision prec(out_digits(s.tol) + 12 +
                       static_cast<int>(cancellation_digits(theta + 1, std::pow(w.r, theta), w.phase * theta)));
  CReal pref = exp(CReal(Real(theta) - Real(alpha) - 1, Real(0)) *
                   CReal(log(Real(w.r)), Real(w.phase)));
  return pref * g;
}

}  // namespace mbhe
