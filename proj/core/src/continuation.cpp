#include "coulomb1d/continuation.hpp"

#include <cmath>

#include "coulomb1d/gamma.hpp"

namespace coulomb1d::continuation {

namespace {

const Cplx kI(0.0, 1.0);

ContinuationMatrix limit_matrix(int s, Cplx p) {
  // m -> 1/2 family: V-row reproduces the level-s coefficients exactly, the
  // W-row is the L'Hopital limit of the generic-m formulas (verified against
  // two-sided extrapolation in m).
  using specfun::reciprocal_gamma;
  Cplx u = std::exp(2.0 * kI * kPi * p) - 1.0;
  Cplx beta = -2.0 * kI * kPi * std::exp(kI * kPi * p) * reciprocal_gamma(p) *
              reciprocal_gamma(1.0 + p);
  Cplx delta = -2.0 * kI * kPi * std::exp(kI * kPi * p) * reciprocal_gamma(-p) *
               reciprocal_gamma(1.0 - p);
  ContinuationMatrix mat;
  mat.v_row[0] = 1.0 - double(s) * u;
  mat.v_row[1] = double(s) * beta;
  mat.w_row[0] = double(s) * delta;
  mat.w_row[1] = 1.0 + double(s) * u;
  return mat;
}

}  // namespace

ContinuationCoeffs branch_coeffs(int s, Cplx p) {
  using specfun::reciprocal_gamma;
  Cplx b_V = -double(s) * std::exp(2.0 * kI * kPi * p) + double(s + 1);
  Cplx b_W = -double(s) * 2.0 * kI * kPi * std::exp(kI * kPi * p) *
             reciprocal_gamma(p) * reciprocal_gamma(1.0 + p);
  return {b_V, b_W, s, p};
}

ContinuationMatrix continuation_matrix(int s, Cplx p, Cplx m) {
  if (std::abs(s) > 8)
    throw DomainError("continuation_matrix: winding |s| <= 8 in the public API");
  const Cplx two_m = 2.0 * m;
  const double dist_half = std::abs(m - Cplx(0.5, 0.0));
  if (m == Cplx(0.5, 0.0)) return limit_matrix(s, p);
  if (dist_half < 1e-6) {
    ContinuationMatrix mat = limit_matrix(s, p);
    mat.near_half_integer_warning = true;
    return mat;
  }
  // reject the other half-integers: the direct formulas are singular there
  // and no limit branch is provided for them
  if (two_m.imag() == 0.0 && two_m.real() == std::floor(two_m.real()))
    throw DomainError("continuation_matrix: m half-integer other than 1/2 unsupported");

  using specfun::reciprocal_gamma;
  const double ph = (s % 2 == 0) ? 1.0 : -1.0;
  const Cplx sg = std::sin(2.0 * kPi * m);
  const Cplx sin_s = std::sin(2.0 * kPi * double(s) * m);
  const Cplx sin_sp1 = std::sin(2.0 * kPi * double(s + 1) * m);
  const Cplx sin_sm1 = std::sin(2.0 * kPi * double(s - 1) * m);

  ContinuationMatrix mat;
  mat.v_row[0] = ph * (std::exp(2.0 * kI * kPi * p) * sin_s + sin_sp1) / sg;
  mat.v_row[1] = -ph * (sin_s / sg) * 2.0 * kPi * std::exp(kI * kPi * (p - m)) *
                 reciprocal_gamma(0.5 - m + p) * reciprocal_gamma(0.5 + m + p);
  mat.w_row[0] = ph * (sin_s / sg) * 2.0 * kPi * std::exp(kI * kPi * (p + m)) *
                 reciprocal_gamma(0.5 + m - p) * reciprocal_gamma(0.5 - m - p);
  mat.w_row[1] = -ph * (std::exp(2.0 * kI * kPi * p) * sin_s + sin_sm1) / sg;
  return mat;
}

}  // namespace coulomb1d::continuation
