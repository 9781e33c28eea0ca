#pragma once

// The one-center Coulomb scattering problem on the line: fundamental
// solutions on both half-axes, their small-x boundary structure, the
// three-condition boundary system at x = 0 (closed-form and numeric routes),
// and the derived scattering quantities.
//
// Minus-axis convention: the half-axis solutions reuse the plus-axis formulas
// under alpha -> -alpha with real |x| logarithms (the even-continuation
// flavor).  This is the unique reading that keeps the fundamental-pair
// Wronskian at -2ik on both half-axes, conserves the probability current
// through x = 0, and reproduces the closed-form scattering coefficients.

#include <optional>
#include <utility>

#include "coulomb1d/types.hpp"

namespace coulomb1d::scattering {

enum class Arg2k { scattering, bound };  // arg 2k = 0 or pi/2

struct PhysicalParams {
  double alpha = 0.0;  // coupling, units 1/length with hbar^2/2m = 1
  Cplx k{1.0, 0.0};    // momentum
  Arg2k arg2k = Arg2k::scattering;

  static PhysicalParams scattering_axis(double alpha, double k_real);
  static PhysicalParams bound_axis(double alpha, double kappa);
  void validate() const;

  // i alpha / (2k): imaginary on the scattering axis, real on the bound axis
  Cplx iy() const { return Cplx(0.0, 1.0) * alpha / (2.0 * k); }
};

struct BranchParams {
  int s = 1;
  int r = 0;
  Cplx Q1{1.0, 0.0};
  Cplx Q2{1.0, 0.0};
};

struct ExtensionParams {
  Cplx v_plus_minus_V{0.0, 0.0};
  Cplx v_plus_plus_W{0.0, 0.0};
  Cplx v_minus_minus_V{0.0, 0.0};
  Cplx v_minus_plus_W{0.0, 0.0};  // accepted, never constrained by the solvers
};

struct ScatteringSolution {
  Cplx A_R, B_R;
  Cplx R, T;
  double current = 0.0;             // k(-|A_R|^2 + |B_R|^2)
  // | |R|^2 + |T|^2 - 1 |: the unitarity condition in the normalization that
  // stays evaluable when |A_R| is exponentially large (it is the
  // |A|^2 - |B|^2 = 1 condition divided by |A|^2)
  double unitarity_residual = 0.0;
  bool impenetrable = false;        // A_R degenerate: R formally infinite, T = 0
};

enum class FundamentalId { plusW, plusV, minusW, minusV };

struct ValueDeriv {
  Cplx value;
  Cplx derivative;
};

// psi_id(k, x) and its x-derivative (analytic differentiation of the series /
// asymptotics, never finite differences).
ValueDeriv fundamental_solution(FundamentalId id, const PhysicalParams& params,
                                double x, const EvalPolicy& policy = default_policy());

struct SmallXResult {
  Cplx value;
  Cplx derivative;
  bool out_of_range_warning = false;  // |2kx| > 0.1
};

// truncated boundary expansions (constant + x(ln) order for the value, one
// order more for the derivative, exactly the displayed orders)
SmallXResult small_x_expansion(FundamentalId id, const PhysicalParams& params, double x);

// Boundary structure psi = N(c + x(d + e ln|x|)): value at 0 is N c, the
// derivative's constant part is N(d+e) and its ln|x| coefficient is N e.
struct BoundaryData {
  Cplx N, c, d, e;
  Cplx value0() const { return N * c; }
  Cplx deriv_const() const { return N * (d + e); }
  Cplx deriv_log() const { return N * e; }
};
BoundaryData boundary_data(FundamentalId id, const PhysicalParams& params);

// variation-of-constants map: A2 = (1/Q1)(r+s)/s, B2 = -(1/Q2)(r/s)
std::pair<Cplx, Cplx> variation_constants(const BranchParams& branch);

struct GeneralSolutionCoeffs {
  Cplx a_plus_minus, a_plus_plus, a_minus_minus, a_minus_plus;
};
GeneralSolutionCoeffs general_solution_coeffs(Cplx alpha2, Cplx beta2,
                                              const BranchParams& branch,
                                              const PhysicalParams& params);

struct BoundarySolution {
  Cplx A_R, B_R;
  Cplx v_minus_minus_V;
};

// closed forms of the boundary system
BoundarySolution solve_boundary_closed(Cplx v_plus_minus_V, Cplx v_plus_plus_W,
                                       const PhysicalParams& params);

// independent route: assemble the three boundary conditions from the
// small-x structure of the wave functions and solve the 3x3 linear system
BoundarySolution solve_boundary_numeric(Cplx v_plus_minus_V, Cplx v_plus_plus_W,
                                        const PhysicalParams& params);

// Scattering report for a given extension, or for the real self-adjoint
// extension when ext is empty.  alpha = 0 returns the exact free limit.
ScatteringSolution scattering_report(const std::optional<ExtensionParams>& ext,
                                     const PhysicalParams& params);

struct F2AtZero {
  Cplx value;
  double abs2;
};
F2AtZero f2_at_zero(const PhysicalParams& params);

struct CompleteTransmission {
  Cplx T;
  double abs2T;
  double unitarity_violation;
};
// with R = 0 imposed: |T|^2 = e^{pi alpha/k}, never 1 for alpha != 0
CompleteTransmission complete_transmission_check(const PhysicalParams& params);

struct ImpenetrableCase {
  Cplx R;
  double abs2R;
  Cplx f2R;
};
// Dirichlet family: |R| = 1 and the renormalized wave function vanishes at 0
ImpenetrableCase impenetrable_case(const PhysicalParams& params, double x,
                                   const EvalPolicy& policy = default_policy());

namespace detail {
// real self-adjoint extension parameters, shared with the extensions module
Cplx real_v_plus_minus_V(const PhysicalParams& params);
Cplx real_v_plus_plus_W(const PhysicalParams& params);
}  // namespace detail

}  // namespace coulomb1d::scattering
