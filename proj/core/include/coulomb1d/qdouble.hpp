#pragma once

// Minimal quad-double (~62 significant digits), real arithmetic only.
// The reference evaluator uses it to certify up to 30 digits for the real
// hyperbolic closed forms; everything complex runs on the DDouble layer.

#include <array>

namespace coulomb1d {

struct QDouble {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  QDouble() = default;
  QDouble(double x) : c{x, 0.0, 0.0, 0.0} {}
  QDouble(double a, double b, double d, double e) : c{a, b, d, e} {}

  explicit operator double() const { return c[0] + c[1] + c[2] + c[3]; }
};

QDouble qd_add(const QDouble& a, const QDouble& b);
QDouble qd_sub(const QDouble& a, const QDouble& b);
QDouble qd_mul(const QDouble& a, const QDouble& b);
QDouble qd_div(const QDouble& a, const QDouble& b);
QDouble qd_neg(const QDouble& a);

inline QDouble operator+(const QDouble& a, const QDouble& b) { return qd_add(a, b); }
inline QDouble operator-(const QDouble& a, const QDouble& b) { return qd_sub(a, b); }
inline QDouble operator-(const QDouble& a) { return qd_neg(a); }
inline QDouble operator*(const QDouble& a, const QDouble& b) { return qd_mul(a, b); }
inline QDouble operator/(const QDouble& a, const QDouble& b) { return qd_div(a, b); }

QDouble qd_exp(const QDouble& x);
QDouble qd_log(const QDouble& x);
QDouble qd_sinh(const QDouble& x);
QDouble qd_cosh(const QDouble& x);
QDouble qd_tanh(const QDouble& x);
QDouble qd_sech(const QDouble& x);

inline const QDouble qd_pi{3.141592653589793, 1.2246467991473532e-16,
                           -2.9947698097183397e-33, 1.1124542208633653e-49};
inline const QDouble qd_ln2{0.6931471805599453, 2.3190468138462996e-17,
                            5.707708438416212e-34, -3.5824322106018114e-50};

}  // namespace coulomb1d
