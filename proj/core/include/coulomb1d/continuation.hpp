#pragma once

// Analytic continuation of the Whittaker pair (V, W) across the logarithmic
// branch point at z = 0: winding-s coefficients at m = 1/2 and the full 2x2
// continuation matrices for generic m, with the m -> 1/2 limit family.

#include "coulomb1d/types.hpp"

namespace coulomb1d::continuation {

struct ContinuationCoeffs {
  Cplx b_V;
  Cplx b_W;
  int s;
  Cplx p;
};

// b_s^V = -s e^{2 i pi p} + (s+1),  b_s^W = -2 i pi s e^{i pi p}/(Gamma(p)Gamma(1+p)),
// the reciprocal-gamma form keeping b_W entire in p.
ContinuationCoeffs branch_coeffs(int s, Cplx p);

struct ContinuationMatrix {
  // row-major entries mapping the column (V, W) at z to its value at z e^{2 i pi s}
  Cplx v_row[2];
  Cplx w_row[2];
  bool near_half_integer_warning = false;
};

// |s| <= 8.  m = 1/2 selects the analytic limit family; m within 1e-6 of 1/2
// (but not exactly) is evaluated through the limit branch with a warning flag.
// Other half-integer m is rejected.
ContinuationMatrix continuation_matrix(int s, Cplx p, Cplx m);

}  // namespace coulomb1d::continuation
