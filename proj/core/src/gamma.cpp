#include "coulomb1d/gamma.hpp"

#include <array>
#include <cmath>

namespace coulomb1d::specfun {

namespace {

constexpr std::array<BernoulliRational, 15> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi z) with argument reduction so accuracy is relative even near the
// zeros at integers.
Cplx sin_pi(Cplx z) {
  double n = std::round(z.real());
  Cplx w = z - n;
  Cplx s = std::sin(kPi * w);
  return (std::fmod(std::abs(n), 2.0) == 0.0) ? s : -s;
}

Cplx cot_pi(Cplx z) {
  double n = std::round(z.real());
  Cplx w = z - n;
  return std::cos(kPi * w) / std::sin(kPi * w);
}

// Stirling tail for Re z >= 1/2 after shifting |z| up.
Cplx log_gamma_stirling(Cplx z) {
  Cplx shift(0.0, 0.0);
  while (std::abs(z) < 12.0) {
    shift += log_principal(z);
    z += 1.0;
  }
  Cplx inv = 1.0 / z, inv2 = inv * inv;
  Cplx sum(0.0, 0.0);
  Cplx pw = inv;
  for (int n = 1; n <= 10; ++n) {
    const auto& b = kBernoulli[size_t(n - 1)];
    sum += (b.num / b.den) / (2.0 * n * (2.0 * n - 1.0)) * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kLogSqrt2Pi + sum - shift;
}

}  // namespace

const BernoulliRational& bernoulli_2n(int n) {
  if (n < 1 || n > int(kBernoulli.size()))
    throw DomainError("bernoulli_2n: only B_2..B_30 are tabulated");
  return kBernoulli[size_t(n - 1)];
}

Cplx log_gamma(Cplx z) {
  if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_stirling(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
  return std::log(Cplx(kPi)) - std::log(sin_pi(z)) - log_gamma_stirling(1.0 - z);
}

Cplx gamma_complex(Cplx z) {
  Cplx g = std::exp(log_gamma(z));
  if (!is_finite(g)) throw OverflowError("gamma_complex: |Gamma(z)| out of range");
  return g;
}

Cplx reciprocal_gamma(Cplx z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() >= 0.5) return std::exp(-log_gamma_stirling(z));
  // entire representation 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  Cplx r = sin_pi(z) * std::exp(log_gamma_stirling(1.0 - z)) / kPi;
  return require_finite(r, "reciprocal_gamma");
}

Cplx digamma(Cplx z) {
  if (!is_finite(z)) throw DomainError("digamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at non-positive integer");
  if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cot_pi(z);
  Cplx corr(0.0, 0.0);
  while (std::abs(z) < 12.0) {
    corr += 1.0 / z;
    z += 1.0;
  }
  Cplx inv = 1.0 / z, inv2 = inv * inv;
  Cplx sum = std::log(z) - 0.5 * inv;
  Cplx pw = inv2;
  for (int n = 1; n <= 10; ++n) {
    const auto& b = kBernoulli[size_t(n - 1)];
    sum -= (b.num / b.den) / (2.0 * n) * pw;
    pw *= inv2;
  }
  return sum - corr;
}

// ----- double-double variants -----

namespace {

DDComplex dd_sin_pi(DDComplex z) {
  double n = std::round(z.re.hi);
  DDComplex w{z.re - DDouble(n), z.im};
  // sin(pi w) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
  DDouble px = dd_pi * w.re, py = dd_pi * w.im;
  DDouble s, c;
  dd_sincos(px, s, c);
  DDComplex r{s * dd_cosh(py), c * dd_sinh(py)};
  if (std::fmod(std::abs(n), 2.0) != 0.0) r = -r;
  return r;
}

DDComplex dd_clog_local(DDComplex z) { return dd_clog(z); }

DDComplex dd_log_gamma_stirling(DDComplex z) {
  DDComplex shift{DDouble(0.0), DDouble(0.0)};
  while (double(dd_cabs(z)) < 25.0) {
    shift += dd_clog_local(z);
    z += DDComplex(1.0, 0.0);
  }
  DDComplex one{DDouble(1.0), DDouble(0.0)};
  DDComplex inv = one / z, inv2 = inv * inv;
  DDComplex sum{DDouble(0.0), DDouble(0.0)};
  DDComplex pw = inv;
  for (int n = 1; n <= 15; ++n) {
    const auto& b = kBernoulli[size_t(n - 1)];
    DDouble coef = DDouble(b.num) / DDouble(b.den) /
                   DDouble(2.0 * n * (2.0 * n - 1.0));
    sum += DDComplex{coef, DDouble(0.0)} * pw;
    pw *= inv2;
  }
  // log sqrt(2 pi) at dd precision
  DDComplex half_log_2pi{DDouble(0.9189385332046727, 5.481533158314054e-17), DDouble(0.0)};
  DDComplex zl = dd_clog_local(z);
  DDComplex res = (z - DDComplex(0.5, 0.0)) * zl - z + half_log_2pi + sum - shift;
  return res;
}

}  // namespace

DDComplex dd_log_gamma(DDComplex z) {
  if (z.re.hi >= 0.5) return dd_log_gamma_stirling(z);
  DDComplex pi_c{dd_pi, DDouble(0.0)};
  return dd_clog_local(pi_c) - dd_clog_local(dd_sin_pi(z)) -
         dd_log_gamma_stirling(DDComplex(1.0, 0.0) - z);
}

DDComplex dd_gamma(DDComplex z) { return dd_cexp(dd_log_gamma(z)); }

DDComplex dd_reciprocal_gamma(DDComplex z) {
  if (z.im.hi == 0.0 && z.im.lo == 0.0 && z.re.hi <= 0.0 &&
      z.re.hi == std::floor(z.re.hi) && z.re.lo == 0.0)
    return {DDouble(0.0), DDouble(0.0)};
  if (z.re.hi >= 0.5) return dd_cexp(-dd_log_gamma_stirling(z));
  DDComplex g = dd_cexp(dd_log_gamma_stirling(DDComplex(1.0, 0.0) - z));
  return dd_sin_pi(z) * g / DDComplex{dd_pi, DDouble(0.0)};
}

DDComplex dd_digamma(DDComplex z) {
  if (z.re.hi < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    double n = std::round(z.re.hi);
    DDComplex w{z.re - DDouble(n), z.im};
    DDouble px = dd_pi * w.re, py = dd_pi * w.im;
    DDouble s, c;
    dd_sincos(px, s, c);
    DDComplex sinw{s * dd_cosh(py), c * dd_sinh(py)};
    DDComplex cosw{c * dd_cosh(py), -(s * dd_sinh(py))};
    DDComplex cot = cosw / sinw;
    return dd_digamma(DDComplex(1.0, 0.0) - z) - DDComplex{dd_pi, DDouble(0.0)} * cot;
  }
  DDComplex corr{DDouble(0.0), DDouble(0.0)};
  DDComplex one{DDouble(1.0), DDouble(0.0)};
  while (double(dd_cabs(z)) < 25.0) {
    corr += one / z;
    z += one;
  }
  DDComplex inv = one / z, inv2 = inv * inv;
  DDComplex sum = dd_clog_local(z) - DDComplex(0.5, 0.0) * inv;
  DDComplex pw = inv2;
  for (int n = 1; n <= 15; ++n) {
    const auto& b = kBernoulli[size_t(n - 1)];
    DDouble coef = DDouble(b.num) / DDouble(b.den) / DDouble(2.0 * n);
    sum -= DDComplex{coef, DDouble(0.0)} * pw;
    pw *= inv2;
  }
  return sum - corr;
}

ReDigammaResult re_digamma_imag(double y, ReDigammaMode mode, int terms) {
  if (terms < 1) throw DomainError("re_digamma_imag: terms must be >= 1");
  if (mode == ReDigammaMode::series) {
    double y2 = y * y;
    double sum = 0.0;
    for (int n = terms; n >= 1; --n) {  // small terms first
      double dn = double(n);
      sum += 1.0 / (dn * (dn * dn + y2));
    }
    double tail = y2 * 0.5 / (double(terms) * double(terms));
    return {-kEulerGamma + y2 * sum, tail, terms};
  }
  // asymptotic mode
  if (y == 0.0) throw DomainError("re_digamma_imag: asymptotic mode needs y != 0");
  double ay = std::abs(y);
  if (ay < 1.0) throw DomainError("re_digamma_imag: asymptotic mode diverges for |y| < 1");
  if (terms > 15) throw DomainError("re_digamma_imag: Bernoulli table holds 15 terms");
  double sum = std::log(ay);
  double y2 = ay * ay;
  double pw = y2;
  double prev = std::numeric_limits<double>::infinity();
  double tail = 0.0;
  int used = 0;
  for (int n = 1; n <= terms; ++n) {
    const auto& b = bernoulli_2n(n);
    double t = ((n % 2 == 1) ? 1.0 : -1.0) * (b.num / b.den) / (2.0 * n * pw);
    if (std::abs(t) > prev) {  // divergence onset: stop before the smallest term
      tail = std::abs(t);
      break;
    }
    sum += t;
    prev = std::abs(t);
    used = n;
    pw *= y2;
    if (n < 15) {
      const auto& nb = bernoulli_2n(n + 1);
      tail = std::abs((nb.num / nb.den) / (2.0 * (n + 1.0) * pw));
    }
  }
  return {sum, tail, used};
}

}  // namespace coulomb1d::specfun
