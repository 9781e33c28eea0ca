#pragma once

// Complex gamma, reciprocal gamma and digamma kernels.
//
// Scheme: reflection to Re z >= 1/2, recurrence shift to |z| >= 12 (25 for
// the double-double variants) and a Stirling tail with exact-rational
// Bernoulli coefficients.  Delivers >= 12 significant digits on
// |Re z|, |Im z| <= 50 (the double-double variants ~30 digits).

#include "coulomb1d/ddouble.hpp"
#include "coulomb1d/types.hpp"

namespace coulomb1d::specfun {

// Exact rational Bernoulli numbers B_2..B_30 (numerator, denominator are
// exact in double).
struct BernoulliRational {
  double num;
  double den;
};
// index n = 1..15 gives B_{2n}
const BernoulliRational& bernoulli_2n(int n);

Cplx log_gamma(Cplx z);           // principal-ish branch; exp() of it is Gamma
Cplx gamma_complex(Cplx z);       // PoleError at 0,-1,-2,...; OverflowError on range
Cplx reciprocal_gamma(Cplx z);    // entire; exactly 0 at the poles of Gamma
Cplx digamma(Cplx z);             // PoleError at 0,-1,-2,...

DDComplex dd_log_gamma(DDComplex z);
DDComplex dd_gamma(DDComplex z);
DDComplex dd_reciprocal_gamma(DDComplex z);
DDComplex dd_digamma(DDComplex z);

enum class ReDigammaMode { series, asymptotic };

struct ReDigammaResult {
  double value;
  double tail_bound;  // estimate of the truncation remainder
  int terms_used;
};

// Re psi(i y) by the convergent series  -gamma_E + y^2 sum 1/(n(n^2+y^2))
// or the Bernoulli asymptotic  ln|y| + sum (-1)^{n-1} B_{2n}/(2n y^{2n}).
// The asymptotic form rejects |y| < 1 (divergent regime) and is capped at
// the stored Bernoulli table (15 terms), stopping early once terms grow.
ReDigammaResult re_digamma_imag(double y, ReDigammaMode mode, int terms);

}  // namespace coulomb1d::specfun
