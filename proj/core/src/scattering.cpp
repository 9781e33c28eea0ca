#include "coulomb1d/scattering.hpp"

#include <array>
#include <cmath>

#include "coulomb1d/confluent.hpp"
#include "coulomb1d/continuation.hpp"
#include "coulomb1d/gamma.hpp"

namespace coulomb1d::scattering {

namespace {

const Cplx kI(0.0, 1.0);

using specfun::digamma;
using specfun::gamma_complex;
using specfun::reciprocal_gamma;

bool is_plus(FundamentalId id) {
  return id == FundamentalId::plusW || id == FundamentalId::plusV;
}

// (a22)-(a25) structure coefficients for the plus-axis pair at coupling a;
// the minus-axis ids reuse them under a -> -a (even-continuation flavor).
struct ExpansionData {
  Cplx N, c, d, e;    // value:      N ( c + x (d + e ln|x|) )
  Cplx Dx, Ex;        // derivative: N ( (d+e) + e ln|x| + x (Dx + Ex ln|x|) )
};

ExpansionData plus_expansion(FundamentalId base, double a, Cplx k) {
  const Cplx iy = kI * a / (2.0 * k);
  const Cplx pref = std::exp(kPi * a / (4.0 * k));
  const double g = kEulerGamma;
  ExpansionData d;
  if (base == FundamentalId::plusW) {
    const Cplx ln_m2ik = log_principal(-2.0 * kI * k);
    d.N = 2.0 * k * pref / (a * gamma_complex(iy));
    d.c = -kI;
    d.d = kI * a - 2.0 * kI * a * g + k - kI * a * ln_m2ik - kI * a * digamma(1.0 + iy);
    d.e = -kI * a;
    d.Dx = 2.0 * kI * a * a - 2.0 * kI * a * a * g + 3.0 * a * k + kI * k * k -
           kI * a * a * ln_m2ik + 2.0 * a * k * digamma(1.0 + iy) -
           (kI * a * a + 2.0 * a * k) * digamma(2.0 + iy);
    d.Ex = -kI * a * a;
  } else {
    const Cplx ln_p2ik = log_principal(2.0 * kI * k);
    d.N = -2.0 * k * pref / (a * gamma_complex(-iy));
    d.c = -kI;
    d.d = kI * a - 2.0 * kI * a * g - k - kI * a * ln_p2ik - kI * a * digamma(1.0 - iy);
    d.e = -kI * a;
    d.Dx = 2.0 * kI * a * a - 2.0 * kI * a * a * g - 3.0 * a * k + kI * k * k -
           kI * a * a * ln_p2ik - 2.0 * a * k * digamma(1.0 - iy) +
           (2.0 * a * k - kI * a * a) * digamma(2.0 - iy);
    d.Ex = -kI * a * a;
  }
  return d;
}

ExpansionData expansion_data(FundamentalId id, const PhysicalParams& p) {
  switch (id) {
    case FundamentalId::plusW: return plus_expansion(FundamentalId::plusW, p.alpha, p.k);
    case FundamentalId::plusV: return plus_expansion(FundamentalId::plusV, p.alpha, p.k);
    case FundamentalId::minusW: return plus_expansion(FundamentalId::plusW, -p.alpha, p.k);
    case FundamentalId::minusV: return plus_expansion(FundamentalId::plusV, -p.alpha, p.k);
  }
  throw DomainError("expansion_data: bad id");
}

struct KernelSpec {
  Cplx pref, a, w, lnw, dwdx;
};

KernelSpec kernel_spec(FundamentalId id, const PhysicalParams& p, double x) {
  const Cplx iy = p.iy();
  const double ax = std::abs(x);
  KernelSpec s;
  switch (id) {
    case FundamentalId::plusW:
      s = {std::exp(kPi * p.alpha / (4.0 * p.k)), 1.0 + iy, -2.0 * kI * p.k * x,
           log_principal(-2.0 * kI * p.k) + std::log(ax), -2.0 * kI * p.k};
      break;
    case FundamentalId::plusV:
      s = {std::exp(kPi * p.alpha / (4.0 * p.k)), 1.0 - iy, 2.0 * kI * p.k * x,
           log_principal(2.0 * kI * p.k) + std::log(ax), 2.0 * kI * p.k};
      break;
    case FundamentalId::minusW:
      s = {std::exp(-kPi * p.alpha / (4.0 * p.k)), 1.0 - iy, -2.0 * kI * p.k * x,
           log_principal(-2.0 * kI * p.k) + std::log(ax), -2.0 * kI * p.k};
      break;
    case FundamentalId::minusV:
      s = {std::exp(-kPi * p.alpha / (4.0 * p.k)), 1.0 + iy, 2.0 * kI * p.k * x,
           log_principal(2.0 * kI * p.k) + std::log(ax), 2.0 * kI * p.k};
      break;
  }
  return s;
}

ValueDeriv eval_kernel(const KernelSpec& s, const EvalPolicy& policy) {
  using specfun::detail::tricomi_u_on_branch;
  const Cplx u = tricomi_u_on_branch(s.a, 2, s.w, s.lnw, policy);
  const Cplx u2 = tricomi_u_on_branch(s.a + 1.0, 3, s.w, s.lnw, policy);
  const Cplx eh = std::exp(-0.5 * s.w);
  const Cplx value = s.pref * eh * s.w * u;
  // d/dw [e^{-w/2} w U] = e^{-w/2} [(1 - w/2) U + w U'], U' = -a U(a+1, c+1, w)
  const Cplx dvalue = s.pref * eh * ((1.0 - 0.5 * s.w) * u - s.a * s.w * u2) * s.dwdx;
  return {require_finite(value, "fundamental_solution"),
          require_finite(dvalue, "fundamental_solution derivative")};
}

// reflection coefficients of the minus-axis solutions onto the plus-axis pair
// evaluated at -x: exact identities following from the Whittaker connection
// formulas for the even-continuation flavor.
void minus_reflection_coeffs(FundamentalId id, const PhysicalParams& p, Cplx& cW, Cplx& cV) {
  const Cplx iy = p.iy();
  const Cplx ch = std::cosh(kPi * p.alpha / (2.0 * p.k));
  if (id == FundamentalId::minusW) {
    Cplx g = gamma_complex(-iy);
    cW = 2.0 * kPi * p.k / (p.alpha * g * g);
    cV = ch;
  } else {
    Cplx g = gamma_complex(iy);
    cW = ch;
    cV = 2.0 * kPi * p.k / (p.alpha * g * g);
  }
}

}  // namespace

PhysicalParams PhysicalParams::scattering_axis(double alpha, double k_real) {
  PhysicalParams p{alpha, Cplx(k_real, 0.0), Arg2k::scattering};
  p.validate();
  return p;
}

PhysicalParams PhysicalParams::bound_axis(double alpha, double kappa) {
  PhysicalParams p{alpha, Cplx(0.0, kappa), Arg2k::bound};
  p.validate();
  return p;
}

void PhysicalParams::validate() const {
  if (k == Cplx(0.0, 0.0)) throw DomainError("PhysicalParams: k must not be 0");
  if (!std::isfinite(alpha) || !is_finite(k))
    throw DomainError("PhysicalParams: non-finite parameters");
  if (arg2k == Arg2k::scattering) {
    if (k.imag() != 0.0 || k.real() <= 0.0)
      throw DomainError("PhysicalParams: arg 2k = 0 requires real k > 0");
  } else {
    if (k.real() != 0.0 || k.imag() <= 0.0)
      throw DomainError("PhysicalParams: arg 2k = pi/2 requires k = i kappa, kappa > 0");
  }
}

ValueDeriv fundamental_solution(FundamentalId id, const PhysicalParams& params,
                                double x, const EvalPolicy& policy) {
  params.validate();
  if (params.alpha == 0.0)
    throw DomainError("fundamental_solution: alpha = 0 (free particle has no Coulomb pair)");
  if (x == 0.0) throw DomainError("fundamental_solution: x = 0 is the singular point");
  if (is_plus(id) && x < 0.0)
    throw DomainError("fundamental_solution: plus-axis id requires x > 0");
  if (!is_plus(id) && x > 0.0)
    throw DomainError("fundamental_solution: minus-axis id requires x < 0");

  const KernelSpec spec = kernel_spec(id, params, x);
  if (!is_plus(id) && std::abs(spec.w) >= policy.asymptotic_threshold) {
    // off-branch asymptotics are not a single Poincare series; use the exact
    // reflection onto the plus-axis pair instead
    Cplx cW, cV;
    minus_reflection_coeffs(id, params, cW, cV);
    ValueDeriv pw = fundamental_solution(FundamentalId::plusW, params, -x, policy);
    ValueDeriv pv = fundamental_solution(FundamentalId::plusV, params, -x, policy);
    return {cW * pw.value + cV * pv.value,
            -(cW * pw.derivative + cV * pv.derivative)};
  }
  return eval_kernel(spec, policy);
}

SmallXResult small_x_expansion(FundamentalId id, const PhysicalParams& params, double x) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("small_x_expansion: alpha = 0");
  if (x == 0.0) throw DomainError("small_x_expansion: x = 0");
  if (is_plus(id) != (x > 0.0))
    throw DomainError("small_x_expansion: x on the wrong half-axis for this id");
  const ExpansionData d = expansion_data(id, params);
  const double L = std::log(std::abs(x));
  SmallXResult r;
  r.value = d.N * (d.c + x * (d.d + d.e * L));
  r.derivative = d.N * ((d.d + d.e) + d.e * L + x * (d.Dx + d.Ex * L));
  r.out_of_range_warning = std::abs(2.0 * params.k * x) > 0.1;
  return r;
}

BoundaryData boundary_data(FundamentalId id, const PhysicalParams& params) {
  const ExpansionData d = expansion_data(id, params);
  return {d.N, d.c, d.d, d.e};
}

std::pair<Cplx, Cplx> variation_constants(const BranchParams& branch) {
  if (branch.s == 0) throw DomainError("variation_constants: s must not be 0");
  if (branch.Q1 == Cplx(0.0, 0.0) || branch.Q2 == Cplx(0.0, 0.0))
    throw DomainError("variation_constants: Q1, Q2 must not vanish");
  Cplx A2 = (1.0 / branch.Q1) * double(branch.r + branch.s) / double(branch.s);
  Cplx B2 = -(1.0 / branch.Q2) * double(branch.r) / double(branch.s);
  return {A2, B2};
}

GeneralSolutionCoeffs general_solution_coeffs(Cplx alpha2, Cplx beta2,
                                              const BranchParams& branch,
                                              const PhysicalParams& params) {
  using continuation::branch_coeffs;
  const Cplx p_plus = -params.iy();   // -i alpha / 2k
  const Cplx p_minus = params.iy();   // +i alpha / 2k
  const auto bs = branch_coeffs(branch.s, p_plus);
  const auto br = branch_coeffs(branch.r, p_minus);
  const auto brs = branch_coeffs(branch.r + branch.s, p_minus);
  GeneralSolutionCoeffs g;
  g.a_plus_minus = alpha2 + beta2 * bs.b_V;
  g.a_plus_plus = -beta2 * bs.b_W;
  g.a_minus_minus = branch.Q1 * alpha2 * br.b_V + branch.Q2 * beta2 * brs.b_V;
  g.a_minus_plus = -(branch.Q1 * alpha2 * br.b_W + branch.Q2 * beta2 * brs.b_W);
  return g;
}

BoundarySolution solve_boundary_closed(Cplx v1, Cplx v2, const PhysicalParams& params) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("solve_boundary_closed: alpha = 0");
  const Cplx E = std::exp(kPi * params.alpha / params.k);
  const Cplx D = 2.0 + v1 * (1.0 + E) + v2 * (1.0 - E);
  const double scale = 2.0 + std::abs(v1) * (1.0 + std::abs(E)) +
                       std::abs(v2) * (1.0 + std::abs(E));
  if (std::abs(D) < 1e-12 * scale)
    throw SingularSystemError(
        "solve_boundary_closed: degenerate denominator (impenetrable family)");
  const Cplx g = gamma_complex(params.iy());
  BoundarySolution out;
  out.A_R = 4.0 * kPi * params.k * (1.0 + v2) / (params.alpha * D * g * g);
  out.B_R = (1.0 + E) * (1.0 + v1) / (std::exp(kPi * params.alpha / (2.0 * params.k)) * D);
  out.v_minus_minus_V =
      (-4.0 - (3.0 + E) * v1 - (3.0 - E) * v2 - 2.0 * v1 * v2) / (-D);
  return out;
}

BoundarySolution solve_boundary_numeric(Cplx v1, Cplx v2, const PhysicalParams& params) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("solve_boundary_numeric: alpha = 0");
  const BoundaryData pV = boundary_data(FundamentalId::plusV, params);
  const BoundaryData pW = boundary_data(FundamentalId::plusW, params);
  const BoundaryData mV = boundary_data(FundamentalId::minusV, params);

  // unknowns X = (A_R, B_R, v_-): continuity of f2, the derivative-constant
  // condition and the ln x coefficient condition
  Cplx M[3][4] = {
      {pV.value0(), pW.value0(), Cplx(0.0, 0.0), mV.value0()},
      {(1.0 + v1) * pV.deriv_const(), (1.0 + v2) * pW.deriv_const(), mV.deriv_const(),
       mV.deriv_const()},
      {(1.0 + v1) * pV.deriv_log(), (1.0 + v2) * pW.deriv_log(), mV.deriv_log(),
       mV.deriv_log()},
  };

  // Gaussian elimination with partial pivoting on the 3x3 system
  double norm = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) norm = std::max(norm, std::abs(M[i][j]));
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (std::abs(M[piv][col]) < 1e-14 * norm) {
      double cond = norm / std::max(std::abs(M[piv][col]), 1e-300);
      throw SingularSystemError("solve_boundary_numeric: singular system, condition ~ " +
                                std::to_string(cond));
    }
    if (piv != col)
      for (int j = col; j < 4; ++j) std::swap(M[piv][j], M[col][j]);
    for (int r = col + 1; r < 3; ++r) {
      Cplx f = M[r][col] / M[col][col];
      for (int j = col; j < 4; ++j) M[r][j] -= f * M[col][j];
    }
  }
  Cplx X[3];
  for (int i = 2; i >= 0; --i) {
    Cplx acc = M[i][3];
    for (int j = i + 1; j < 3; ++j) acc -= M[i][j] * X[j];
    X[i] = acc / M[i][i];
  }
  return {X[0], X[1], X[2]};
}

namespace detail {

Cplx real_v_plus_minus_V(const PhysicalParams& p) {
  const double arg2k = (p.arg2k == Arg2k::scattering) ? 0.0 : kPi / 2.0;
  const Cplx C = std::cosh(kPi * p.alpha / (2.0 * p.k)) /
                 std::sinh(kPi * p.alpha / (2.0 * p.k));
  return (-kPi + 2.0 * arg2k + kPi * C) / (-2.0 * arg2k - kPi * C);
}

Cplx real_v_plus_plus_W(const PhysicalParams& p) {
  const double arg2k = (p.arg2k == Arg2k::scattering) ? 0.0 : kPi / 2.0;
  const Cplx E = std::exp(kPi * p.alpha / p.k);
  return 2.0 * (kPi + arg2k - E * arg2k) / ((E - 1.0) * (kPi + 2.0 * arg2k));
}

}  // namespace detail

ScatteringSolution scattering_report(const std::optional<ExtensionParams>& ext,
                                     const PhysicalParams& params) {
  params.validate();
  if (params.arg2k != Arg2k::scattering)
    throw DomainError("scattering_report: unitarity accounting needs arg 2k = 0");
  const double k = params.k.real();

  ScatteringSolution sol;
  if (params.alpha == 0.0) {
    // exact free-particle limit: the closed forms degenerate but T -> 1
    sol.A_R = 1.0;
    sol.B_R = 0.0;
    sol.R = 0.0;
    sol.T = 1.0;
    sol.current = -k;
    sol.unitarity_residual = 0.0;
    return sol;
  }

  Cplx v1, v2;
  if (ext.has_value()) {
    v1 = ext->v_plus_minus_V;
    v2 = ext->v_plus_plus_W;
  } else {
    v1 = detail::real_v_plus_minus_V(params);
    v2 = detail::real_v_plus_plus_W(params);
  }

  auto impenetrable = [&]() {
    ScatteringSolution s;
    s.impenetrable = true;
    s.A_R = 0.0;
    s.B_R = 0.0;
    s.R = gamma_complex(params.iy()) / gamma_complex(-params.iy());
    s.T = 0.0;
    s.current = -k;
    s.unitarity_residual = std::abs(std::norm(s.R) - 1.0);
    return s;
  };

  BoundarySolution b;
  try {
    b = solve_boundary_closed(v1, v2, params);
  } catch (const SingularSystemError&) {
    return impenetrable();  // the (78) family: no transmission
  }
  if (std::abs(b.A_R) == 0.0) return impenetrable();

  sol.A_R = b.A_R;
  sol.B_R = b.B_R;
  sol.R = b.B_R / b.A_R;
  sol.T = 1.0 / b.A_R;
  sol.current = k * (-std::norm(b.A_R) + std::norm(b.B_R));
  sol.unitarity_residual = std::abs(std::norm(b.A_R) - std::norm(b.B_R) - 1.0);
  return sol;
}

F2AtZero f2_at_zero(const PhysicalParams& params) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("f2_at_zero: alpha = 0");
  if (params.arg2k != Arg2k::scattering)
    throw DomainError("f2_at_zero: requires real k > 0");
  const double a = params.alpha, k = params.k.real();
  F2AtZero out;
  out.value = -2.0 * kI * k * std::exp(-kPi * a / (4.0 * k)) /
              (a * gamma_complex(params.iy()));
  out.abs2 = (2.0 * k / (kPi * a)) * std::exp(-kPi * a / (2.0 * k)) *
             std::sinh(kPi * a / (2.0 * k));
  return out;
}

CompleteTransmission complete_transmission_check(const PhysicalParams& params) {
  params.validate();
  if (params.arg2k != Arg2k::scattering)
    throw DomainError("complete_transmission_check: requires real k > 0");
  const double a = params.alpha, k = params.k.real();
  if (a == 0.0) return {Cplx(1.0, 0.0), 1.0, 0.0};
  CompleteTransmission out;
  out.T = std::exp(kPi * a / (2.0 * k)) * gamma_complex(params.iy()) /
          gamma_complex(-params.iy());
  out.abs2T = std::exp(kPi * a / k);
  out.unitarity_violation = std::abs(out.abs2T - 1.0);
  return out;
}

ImpenetrableCase impenetrable_case(const PhysicalParams& params, double x,
                                   const EvalPolicy& policy) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("impenetrable_case: alpha = 0");
  if (params.arg2k != Arg2k::scattering)
    throw DomainError("impenetrable_case: requires real k > 0");
  if (x < 0.0) throw DomainError("impenetrable_case: x >= 0");
  ImpenetrableCase out;
  out.R = gamma_complex(params.iy()) / gamma_complex(-params.iy());
  out.abs2R = std::norm(out.R);
  if (x == 0.0) {
    out.f2R = boundary_data(FundamentalId::plusV, params).value0() +
              out.R * boundary_data(FundamentalId::plusW, params).value0();
  } else {
    out.f2R = fundamental_solution(FundamentalId::plusV, params, x, policy).value +
              out.R * fundamental_solution(FundamentalId::plusW, params, x, policy).value;
  }
  return out;
}

}  // namespace coulomb1d::scattering
