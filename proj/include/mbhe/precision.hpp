#pragma once

// Arbitrary-precision scalar used throughout: an MPFR-backed floating type with
// runtime-selectable precision, plus a small complex wrapper over it.  Eigen
// dense types work with Real through boost's NumTraits glue.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <mpfr.h>

#include <cmath>
#include <complex>
#include <cstdlib>

namespace mbhe {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline int bits_to_digits10(int bits) { return static_cast<int>(bits * 0.3010299956639812) + 3; }

// Sets the default working precision (decimal digits) for Reals constructed in
// the current scope; restores the previous value on exit.
struct ScopedPrecision {
  unsigned saved;
  explicit ScopedPrecision(int digits10) : saved(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10 < 10 ? 10 : digits10));
  }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ~ScopedPrecision() { Real::default_precision(saved); }
};

struct ScopedPrecisionBits : ScopedPrecision {
  explicit ScopedPrecisionBits(int bits) : ScopedPrecision(bits_to_digits10(bits)) {}
};

// Real gamma at full working precision (mpfr_gamma handles negative
// non-integer arguments).
inline Real gamma_real(const Real& x) {
  Real out;
  mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

inline Real log_gamma_real(const Real& x) {
  Real out;
  int sign = 0;
  mpfr_lgamma(out.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return out;
}

inline Real const_pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

// Minimal complex type over an arbitrary real scalar.  std::complex<T> is only
// specified for the builtin floating types, so high-precision complex work goes
// through this instead.
template <class T>
struct Cplx {
  T re{}, im{};

  Cplx() = default;
  Cplx(const T& r) : re(r) {}
  Cplx(const T& r, const T& i) : re(r), im(i) {}
  Cplx(double r) : re(r) {}
  explicit Cplx(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  Cplx operator-() const { return {-re, -im}; }
  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Cplx& operator*=(const T& s) { re *= s; im *= s; return *this; }
};

template <class T> Cplx<T> operator+(Cplx<T> a, const Cplx<T>& b) { return a += b; }
template <class T> Cplx<T> operator-(Cplx<T> a, const Cplx<T>& b) { return a -= b; }
template <class T> Cplx<T> operator*(Cplx<T> a, const Cplx<T>& b) { return a *= b; }
template <class T> Cplx<T> operator*(Cplx<T> a, const T& s) { return a *= s; }
template <class T> Cplx<T> operator*(const T& s, Cplx<T> a) { return a *= s; }

template <class T>
Cplx<T> operator/(const Cplx<T>& a, const Cplx<T>& b) {
  T d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class T>
Cplx<T> operator/(const Cplx<T>& a, const T& s) { return {a.re / s, a.im / s}; }
template <class T>
Cplx<T> operator/(const T& s, const Cplx<T>& b) { return Cplx<T>(s) / b; }

template <class T> Cplx<T> conj(const Cplx<T>& z) { return {z.re, -z.im}; }
template <class T> T norm2(const Cplx<T>& z) { return z.re * z.re + z.im * z.im; }
template <class T> T abs(const Cplx<T>& z) { using std::sqrt; return sqrt(norm2(z)); }
template <class T> T arg(const Cplx<T>& z) { using std::atan2; return atan2(z.im, z.re); }

template <class T>
Cplx<T> exp(const Cplx<T>& z) {
  using std::exp; using std::sin; using std::cos;
  T m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

template <class T>
Cplx<T> log(const Cplx<T>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class T>
Cplx<T> sqrt(const Cplx<T>& z) {
  using std::sqrt; using std::abs;
  T m = mbhe::abs(z);
  if (m == T(0)) return {T(0), T(0)};
  T r = sqrt((m + z.re) / T(2));
  T i = sqrt((m - z.re) / T(2));
  if (z.im < T(0)) i = -i;
  // stabilize the smaller component against cancellation
  if (r != T(0) && i != T(0)) {
    if (abs(z.re) > T(0)) {
      if (z.re > T(0)) i = z.im / (T(2) * r);
      else r = z.im / (T(2) * i);
    }
  }
  return {r, i};
}

template <class T>
Cplx<T> pow(const Cplx<T>& z, const T& p) { return exp(log(z) * p); }

template <class T>
Cplx<T> pow(const Cplx<T>& z, const Cplx<T>& p) { return exp(log(z) * p); }

template <class T>
Cplx<T> sin(const Cplx<T>& z) {
  using std::sin; using std::cos; using std::sinh; using std::cosh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

using CReal = Cplx<Real>;

inline CReal to_creal(const std::complex<double>& z) { return CReal(z); }

// Polar point with unrestricted phase.  The special-function evaluators accept
// these so callers can pin a branch explicitly (e.g. zeta e^{+pi i} versus
// zeta e^{-pi i}) instead of relying on principal-argument folding.
struct Phased {
  double r;
  double phase;

  static Phased from(const std::complex<double>& z) {
    return {std::abs(z), std::arg(z)};
  }
  std::complex<double> to_complex() const { return std::polar(r, phase); }
  Phased rotated(double dphase) const { return {r, phase + dphase}; }
  Phased root(int m) const { return {std::pow(r, 1.0 / m), phase / m}; }
  Phased power(int m) const { return {std::pow(r, double(m)), phase * m}; }
  // principal representative of the same point
  Phased principal() const {
    double p = std::remainder(phase, 2 * 3.14159265358979323846);
    return {r, p};
  }
};

// environment override used by the CLI and the problem types
inline int env_precision_bits(int fallback) {
  if (const char* s = std::getenv("MBHE_PRECISION_BITS")) {
    int v = std::atoi(s);
    if (v >= 64) return v;
  }
  return fallback;
}

}  // namespace mbhe
