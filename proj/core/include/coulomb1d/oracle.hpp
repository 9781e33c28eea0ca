#pragma once

// Independent verification machinery: ODE residual checks against the
// Schroedinger equation, the Wronskian/asymptotic identity suite, and the
// extended-precision reference evaluator backing the derived test values.

#include <functional>
#include <string>
#include <vector>

#include "coulomb1d/scattering.hpp"

namespace coulomb1d::oracle {

struct ResidualSample {
  double x;
  double residual;
};

struct ResidualReport {
  double max_relative_residual = 0.0;
  std::vector<ResidualSample> samples;
  double step = 0.0;
  std::string method;
  bool trivial_pass = false;  // identically-zero input
};

// residual = |psi'' + (k^2 - eps(x) alpha/x) psi| / (|k^2 psi| + |alpha psi/x| + |psi''|)
// with psi'' from the 5-point stencil plus one Richardson level.  h = 0 selects
// the default step eps^(1/6) |x| (a sqrt(eps) step would drown the second
// difference in rounding noise).
ResidualReport ode_residual(const std::function<Cplx(double)>& psi,
                            const scattering::PhysicalParams& params,
                            const std::vector<double>& xs, double h = 0.0);

struct IdentityCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool pass = true;
  std::string worst_name;
  double worst_margin = 0.0;  // error/tolerance of the worst offender
};

// Wronskians (7), (8), (a6), (a10), (a31)-(a34) and the asymptotic ratio
// checks at kx in {30, 100} on a grid of (alpha, k).
IdentityReport identity_suite(const std::vector<double>& alphas,
                              const std::vector<double>& ks);
IdentityReport identity_suite();  // default grid

struct ReferenceValue {
  Cplx value;
  int certified_digits;
  double error_bound;  // relative
};

// Extended-precision evaluation of a registered closed-form expression.
// Working precision is double-double (complex forms, certifies <= 15 digits)
// or quad-double (real hyperbolic forms, certifies <= 30 digits).  digits
// above the certifiable range raise PrecisionError; digits > 60 is a
// precondition violation.
//
// Registered ids and their inputs:
//   "gamma" [z]        "rgamma" [z]        "digamma" [z]
//   "a3"  [a, c, z]    Kummer M series
//   "a19" [a, z]       U(a, 2, z), principal log
//   "19"  [s, p]       b_s^V      "20" [s, p]  b_s^W
//   "51" | "52" | "53" [v1, v2, alpha, k]
//   "55" [alpha, k]    |f2(0)|^2
//   "59" [alpha, k, x] closed delta coefficient
//   "60" [alpha, k, x, terms]   series form
//   "61" [alpha, k, x, terms]   asymptotic form
//   "66" | "67" [alpha, k]      |T|^2, |R|^2 of the real extension
//   "68" [alpha, kappa]         bound-axis A_R
//   "74" [alpha, k]             e^{pi alpha/k}
ReferenceValue reference_eval(const std::string& expression,
                              const std::vector<Cplx>& inputs, int digits);

}  // namespace coulomb1d::oracle
