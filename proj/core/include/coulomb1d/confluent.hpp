#pragma once

// Confluent hypergeometric kernels on complex arguments:
//   kummer_m   M(a,c,z)                regular solution, power series
//   kummer_n   N(a,c,z)                second-index solution z^{1-c} M(...)
//   tricomi_u  U(a,c,z), c integer     logarithmic expansion / asymptotics
//   vee        V(a,c,z) = e^z U(c-a,c,-z), principal branch of -z
//   whittaker  M/W/V Whittaker family
//
// Region policy: the logarithmic expansion runs in plain double below
// log_expansion_threshold, on the double-double layer in the cancellation
// gap, and the Poincare series takes over above asymptotic_threshold.

#include <functional>

#include "coulomb1d/types.hpp"

namespace coulomb1d::specfun {

Cplx kummer_m(Cplx a, Cplx c, Cplx z, const EvalPolicy& policy = default_policy());

Cplx kummer_n(Cplx a, Cplx c, Cplx z, const EvalPolicy& policy = default_policy());

Cplx tricomi_u(Cplx a, int c, Cplx z, const EvalPolicy& policy = default_policy());

Cplx vee(Cplx a, int c, Cplx z, const EvalPolicy& policy = default_policy());

enum class WhittakerKind { M, W, V };

Cplx whittaker(WhittakerKind kind, Cplx p, Cplx m, Cplx z,
               const EvalPolicy& policy = default_policy());

struct WronskianResult {
  Cplx value;
  double error_estimate;
};

// f g' - f' g with central differences and one Richardson extrapolation level.
WronskianResult numeric_wronskian(const std::function<Cplx(Cplx)>& f,
                                  const std::function<Cplx(Cplx)>& g, Cplx z,
                                  double h);

namespace detail {

// U(a,c,z) with an explicit log-branch datum lnz; exp(lnz) must equal z up to
// a 2*pi*i multiple.  The scattering module evaluates the minus-axis wave
// functions on a non-principal branch through this entry point.
Cplx tricomi_u_on_branch(Cplx a, int c, Cplx z, Cplx lnz, const EvalPolicy& policy);

// individual evaluation routes, exposed for the region-agreement tests
Cplx u_log_expansion(Cplx a, int r, Cplx z, Cplx lnz, const EvalPolicy& policy,
                     double* accuracy_estimate);
Cplx u_log_expansion_dd(Cplx a, int r, Cplx z, Cplx lnz, const EvalPolicy& policy,
                        double* accuracy_estimate);
Cplx u_asymptotic(Cplx a, Cplx c, Cplx z, Cplx lnz, const EvalPolicy& policy,
                  double* accuracy_estimate);

}  // namespace detail

}  // namespace coulomb1d::specfun
