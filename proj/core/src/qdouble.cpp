#include "coulomb1d/qdouble.hpp"

#include <algorithm>
#include <cmath>

namespace coulomb1d {
namespace {

struct P { double s, e; };

inline P two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline P quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline P two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Distill an unordered list of doubles into a QDouble: repeated two-sum
// sweeps make the sequence non-overlapping, then keep the top four terms.
QDouble distill(double* t, int n) {
  for (int pass = 0; pass < 4; ++pass) {
    for (int i = n - 2; i >= 0; --i) {
      P q = two_sum(t[i], t[i + 1]);
      t[i] = q.s;
      t[i + 1] = q.e;
    }
  }
  double b[4] = {0, 0, 0, 0};
  int k = 0;
  for (int i = 0; i < n && k < 4; ++i)
    if (t[i] != 0.0) b[k++] = t[i];
  return {b[0], b[1], b[2], b[3]};
}

}  // namespace

QDouble qd_neg(const QDouble& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }

QDouble qd_add(const QDouble& a, const QDouble& b) {
  double t[8] = {a.c[0], a.c[1], a.c[2], a.c[3], b.c[0], b.c[1], b.c[2], b.c[3]};
  return distill(t, 8);
}

QDouble qd_sub(const QDouble& a, const QDouble& b) { return qd_add(a, qd_neg(b)); }

QDouble qd_mul(const QDouble& a, const QDouble& b) {
  double t[14];
  int n = 0;
  P p = two_prod(a.c[0], b.c[0]); t[n++] = p.s; t[n++] = p.e;
  p = two_prod(a.c[0], b.c[1]); t[n++] = p.s; t[n++] = p.e;
  p = two_prod(a.c[1], b.c[0]); t[n++] = p.s; t[n++] = p.e;
  p = two_prod(a.c[0], b.c[2]); t[n++] = p.s; t[n++] = p.e;
  p = two_prod(a.c[1], b.c[1]); t[n++] = p.s; t[n++] = p.e;
  p = two_prod(a.c[2], b.c[0]); t[n++] = p.s; t[n++] = p.e;
  t[n++] = a.c[0] * b.c[3] + a.c[1] * b.c[2] + a.c[2] * b.c[1] + a.c[3] * b.c[0];
  t[n++] = a.c[1] * b.c[3] + a.c[2] * b.c[2] + a.c[3] * b.c[1];
  return distill(t, n);
}

QDouble qd_div(const QDouble& a, const QDouble& b) {
  double q[5];
  QDouble r = a;
  for (int i = 0; i < 5; ++i) {
    q[i] = r.c[0] / b.c[0];
    r = qd_sub(r, qd_mul(QDouble(q[i]), b));
  }
  return distill(q, 5);
}

QDouble qd_exp(const QDouble& x) {
  if (x.c[0] > 709.0 || x.c[0] < -745.0) return QDouble(std::exp(x.c[0]));
  double m = std::round(x.c[0] / qd_ln2.c[0]);
  QDouble r = qd_sub(x, qd_mul(QDouble(m), qd_ln2));
  constexpr int kScale = 16;
  r = qd_div(r, QDouble(65536.0));
  QDouble term = r, sum = r;
  for (int n = 2; n <= 22; ++n) {
    term = qd_mul(term, qd_div(r, QDouble(double(n))));
    sum = qd_add(sum, term);
    if (std::abs(term.c[0]) < 1e-70 * (std::abs(sum.c[0]) + 1e-300)) break;
  }
  for (int i = 0; i < kScale; ++i)
    sum = qd_add(qd_mul(QDouble(2.0), sum), qd_mul(sum, sum));
  QDouble res = qd_add(sum, QDouble(1.0));
  return qd_mul(res, QDouble(std::ldexp(1.0, int(m))));
}

QDouble qd_log(const QDouble& x) {
  QDouble y(std::log(x.c[0]));
  for (int i = 0; i < 3; ++i)
    y = qd_sub(qd_add(y, qd_mul(x, qd_exp(qd_neg(y)))), QDouble(1.0));
  return y;
}

QDouble qd_sinh(const QDouble& x) {
  if (std::abs(x.c[0]) < 0.1) {
    QDouble x2 = qd_mul(x, x), term = x, sum = x;
    for (int n = 1; n <= 16; ++n) {
      term = qd_mul(term, qd_div(x2, QDouble(double(2 * n) * double(2 * n + 1))));
      sum = qd_add(sum, term);
      if (std::abs(term.c[0]) < 1e-70 * std::abs(sum.c[0])) break;
    }
    return sum;
  }
  QDouble e = qd_exp(x);
  return qd_mul(QDouble(0.5), qd_sub(e, qd_div(QDouble(1.0), e)));
}

QDouble qd_cosh(const QDouble& x) {
  QDouble e = qd_exp(x);
  return qd_mul(QDouble(0.5), qd_add(e, qd_div(QDouble(1.0), e)));
}

QDouble qd_tanh(const QDouble& x) { return qd_div(qd_sinh(x), qd_cosh(x)); }
QDouble qd_sech(const QDouble& x) { return qd_div(QDouble(1.0), qd_cosh(x)); }

}  // namespace coulomb1d
