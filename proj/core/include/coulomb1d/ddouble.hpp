#pragma once

// Double-double arithmetic: an unevaluated sum of two doubles giving ~31-32
// significant digits.  Used to bridge the cancellation gap of the confluent
// series between the plain-double and asymptotic regions, and as the working
// precision of the reference evaluator.
//
// Error-free transforms follow Dekker/Knuth; transcendentals use argument
// reduction plus Taylor with a final Newton polish where cheaper.

#include <cmath>
#include <cstdint>

namespace coulomb1d {

struct DDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DDouble() = default;
  constexpr DDouble(double h) : hi(h), lo(0.0) {}
  constexpr DDouble(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline DDouble quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DDouble two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline DDouble two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DDouble dd_add(DDouble a, DDouble b) {
  using namespace dd_detail;
  DDouble s = two_sum(a.hi, b.hi);
  DDouble t = two_sum(a.lo, b.lo);
  double lo = s.lo + t.hi;
  DDouble r = quick_two_sum(s.hi, lo);
  lo = r.lo + t.lo;
  return quick_two_sum(r.hi, lo);
}

inline DDouble dd_neg(DDouble a) { return {-a.hi, -a.lo}; }
inline DDouble dd_sub(DDouble a, DDouble b) { return dd_add(a, dd_neg(b)); }

inline DDouble dd_mul(DDouble a, DDouble b) {
  using namespace dd_detail;
  DDouble p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline DDouble dd_div(DDouble a, DDouble b) {
  using namespace dd_detail;
  double q1 = a.hi / b.hi;
  DDouble r = dd_sub(a, dd_mul(b, DDouble(q1)));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, DDouble(q2)));
  double q3 = r.hi / b.hi;
  DDouble q = quick_two_sum(q1, q2);
  return dd_add(q, DDouble(q3));
}

inline DDouble operator+(DDouble a, DDouble b) { return dd_add(a, b); }
inline DDouble operator-(DDouble a, DDouble b) { return dd_sub(a, b); }
inline DDouble operator-(DDouble a) { return dd_neg(a); }
inline DDouble operator*(DDouble a, DDouble b) { return dd_mul(a, b); }
inline DDouble operator/(DDouble a, DDouble b) { return dd_div(a, b); }
inline DDouble& operator+=(DDouble& a, DDouble b) { a = a + b; return a; }
inline DDouble& operator-=(DDouble& a, DDouble b) { a = a - b; return a; }
inline DDouble& operator*=(DDouble& a, DDouble b) { a = a * b; return a; }
inline DDouble& operator/=(DDouble& a, DDouble b) { a = a / b; return a; }

inline bool operator<(DDouble a, DDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DDouble a, DDouble b) { return b < a; }
inline bool operator==(DDouble a, DDouble b) { return a.hi == b.hi && a.lo == b.lo; }

inline DDouble dd_abs(DDouble a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? dd_neg(a) : a; }

// constants (hi/lo splits of 40+ digit references)
inline constexpr DDouble dd_pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DDouble dd_two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DDouble dd_pi_half{1.5707963267948966, 6.123233995736766e-17};
inline constexpr DDouble dd_ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DDouble dd_euler_gamma{0.5772156649015329, -4.942915152430645e-18};

DDouble dd_exp(DDouble x);
DDouble dd_log(DDouble x);
DDouble dd_sqrt(DDouble x);
void dd_sincos(DDouble x, DDouble& s, DDouble& c);
DDouble dd_atan2(DDouble y, DDouble x);
DDouble dd_sinh(DDouble x);
DDouble dd_cosh(DDouble x);
DDouble dd_pown(DDouble x, int n);

// ----- complex double-double -----

struct DDComplex {
  DDouble re, im;
  DDComplex() = default;
  DDComplex(DDouble r) : re(r), im(0.0) {}
  DDComplex(DDouble r, DDouble i) : re(r), im(i) {}
  DDComplex(double r, double i = 0.0) : re(r), im(i) {}
};

inline DDComplex operator+(DDComplex a, DDComplex b) { return {a.re + b.re, a.im + b.im}; }
inline DDComplex operator-(DDComplex a, DDComplex b) { return {a.re - b.re, a.im - b.im}; }
inline DDComplex operator-(DDComplex a) { return {-a.re, -a.im}; }
inline DDComplex operator*(DDComplex a, DDComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DDComplex operator/(DDComplex a, DDComplex b) {
  DDouble d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline DDComplex& operator+=(DDComplex& a, DDComplex b) { a = a + b; return a; }
inline DDComplex& operator-=(DDComplex& a, DDComplex b) { a = a - b; return a; }
inline DDComplex& operator*=(DDComplex& a, DDComplex b) { a = a * b; return a; }
inline DDComplex& operator/=(DDComplex& a, DDComplex b) { a = a / b; return a; }

inline DDComplex dd_conj(DDComplex z) { return {z.re, -z.im}; }
inline DDouble dd_norm(DDComplex z) { return z.re * z.re + z.im * z.im; }
inline DDouble dd_cabs(DDComplex z) { return dd_sqrt(dd_norm(z)); }

inline DDComplex dd_cexp(DDComplex z) {
  DDouble ex = dd_exp(z.re), s, c;
  dd_sincos(z.im, s, c);
  return {ex * c, ex * s};
}

inline DDComplex dd_clog(DDComplex z) {
  // principal branch, arg in (-pi, pi]
  return {DDouble(0.5) * dd_log(dd_norm(z)), dd_atan2(z.im, z.re)};
}

inline DDComplex dd_cpow(DDComplex z, DDComplex w) { return dd_cexp(w * dd_clog(z)); }

}  // namespace coulomb1d
