#include "coulomb1d/ddouble.hpp"

#include <limits>

namespace coulomb1d {

DDouble dd_exp(DDouble x) {
  // e^x = 2^m * exp(r), r = x - m ln2, then r scaled down by 2^9 for Taylor.
  if (x.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
  if (x.hi < -745.0) return {0.0, 0.0};
  double m = std::round(x.hi / dd_ln2.hi);
  DDouble r = x - dd_ln2 * DDouble(m);
  constexpr int kScale = 9;  // 2^9 = 512
  r = r / DDouble(512.0);
  // Taylor sum of exp(r) - 1; |r| <~ 6.8e-4 so ~12 terms reach 1e-40
  DDouble term = r, sum = r;
  for (int n = 2; n <= 16; ++n) {
    term = term * r / DDouble(double(n));
    sum = sum + term;
    if (std::abs(term.hi) < 1e-40 * std::abs(sum.hi)) break;
  }
  // undo scaling: (1+s)^2 - 1 = 2s + s^2, applied kScale times
  for (int i = 0; i < kScale; ++i) sum = DDouble(2.0) * sum + sum * sum;
  DDouble result = sum + DDouble(1.0);
  return result * DDouble(std::ldexp(1.0, int(m)));
}

DDouble dd_log(DDouble x) {
  // Newton iteration on y: y <- y + x e^{-y} - 1, quadratic from double seed
  double seed = std::log(x.hi);
  DDouble y(seed);
  for (int i = 0; i < 2; ++i) y = y + x * dd_exp(dd_neg(y)) - DDouble(1.0);
  return y;
}

DDouble dd_sqrt(DDouble x) {
  if (x.hi == 0.0 && x.lo == 0.0) return {0.0, 0.0};
  double seed = std::sqrt(x.hi);
  DDouble y(seed);
  // Newton: y <- 0.5 (y + x / y)
  for (int i = 0; i < 2; ++i) y = DDouble(0.5) * (y + x / y);
  return y;
}

namespace {

// sin/cos Taylor on |r| <= pi/4
void sincos_taylor(DDouble r, DDouble& s, DDouble& c) {
  DDouble r2 = r * r;
  DDouble term = r, sum = r;
  for (int n = 1; n <= 14; ++n) {
    term = dd_neg(term) * r2 / DDouble(double(2 * n) * double(2 * n + 1));
    sum = sum + term;
    if (std::abs(term.hi) < 1e-40) break;
  }
  s = sum;
  term = DDouble(1.0);
  sum = DDouble(1.0);
  for (int n = 1; n <= 14; ++n) {
    term = dd_neg(term) * r2 / DDouble(double(2 * n - 1) * double(2 * n));
    sum = sum + term;
    if (std::abs(term.hi) < 1e-40) break;
  }
  c = sum;
}

}  // namespace

void dd_sincos(DDouble x, DDouble& s, DDouble& c) {
  // reduce mod 2 pi, then to a quadrant; adequate for |x| <~ 1e12
  double n2pi = std::round(x.hi / dd_two_pi.hi);
  DDouble r = x - dd_two_pi * DDouble(n2pi);
  int q = int(std::round(r.hi / dd_pi_half.hi));
  r = r - dd_pi_half * DDouble(double(q));
  DDouble sr, cr;
  sincos_taylor(r, sr, cr);
  switch (((q % 4) + 4) % 4) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = dd_neg(sr); break;
    case 2: s = dd_neg(sr); c = dd_neg(cr); break;
    default: s = dd_neg(cr); c = sr; break;
  }
}

DDouble dd_atan2(DDouble y, DDouble x) {
  if (y.hi == 0.0 && y.lo == 0.0) return x.hi >= 0.0 ? DDouble(0.0) : dd_pi;
  // Newton polish of the double seed on f(t) = sin(t) x - cos(t) y
  DDouble t(std::atan2(y.hi, x.hi));
  for (int i = 0; i < 2; ++i) {
    DDouble st, ct;
    dd_sincos(t, st, ct);
    DDouble num = y * ct - x * st;
    DDouble den = x * ct + y * st;
    t = t + num / den;
  }
  return t;
}

DDouble dd_sinh(DDouble x) {
  if (std::abs(x.hi) < 0.1) {
    // series avoids cancellation of (e^x - e^{-x})/2 near zero
    DDouble x2 = x * x, term = x, sum = x;
    for (int n = 1; n <= 12; ++n) {
      term = term * x2 / DDouble(double(2 * n) * double(2 * n + 1));
      sum = sum + term;
      if (std::abs(term.hi) < 1e-40) break;
    }
    return sum;
  }
  DDouble e = dd_exp(x);
  return DDouble(0.5) * (e - DDouble(1.0) / e);
}

DDouble dd_cosh(DDouble x) {
  DDouble e = dd_exp(x);
  return DDouble(0.5) * (e + DDouble(1.0) / e);
}

DDouble dd_pown(DDouble x, int n) {
  if (n == 0) return DDouble(1.0);
  bool inv = n < 0;
  unsigned m = inv ? unsigned(-(long long)n) : unsigned(n);
  DDouble acc(1.0), base = x;
  while (m) {
    if (m & 1u) acc = acc * base;
    base = base * base;
    m >>= 1u;
  }
  return inv ? DDouble(1.0) / acc : acc;
}

}  // namespace coulomb1d
