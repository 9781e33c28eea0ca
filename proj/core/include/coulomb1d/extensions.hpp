#pragma once

// The real self-adjoint-extension family and the delta-shaped renormalization
// correction to the potential, in closed, series and low-energy asymptotic
// form.  The correction multiplies theta(x) delta(x); this module reports its
// coefficient as a function of the ln-term abscissa x and never integrates
// distributions.

#include "coulomb1d/scattering.hpp"

namespace coulomb1d::extensions {

using scattering::ExtensionParams;
using scattering::PhysicalParams;

// (real Schroedinger operator) v_-^{-V} = 0, v_+^{-V} and v_+^{+W} from the
// coth/exponential closed forms with the arg 2k of the params.  On the
// scattering axis all outputs are real; the bound-state axis evaluates the
// same formulas literally (the paper leaves that case implicit) and the
// outputs pick up imaginary parts.
ExtensionParams real_extension_params(const PhysicalParams& params);

enum class DeltaForm { closed, series, asymptotic };

struct DeltaCorrection {
  double coefficient;    // multiplier of theta(x) delta(x)
  double x;              // abscissa entering the ln term
  DeltaForm form;
  int terms;             // terms used (series/asymptotic)
  double tail_estimate;  // truncation bound, 0 for the closed form
};

// closed:     -2a [2 gamma_E + ln(2 sqrt(k^2) x) + Re psi(i a/2k)]
// series:     -2a [gamma_E + ln(2 sqrt(k^2) x) + y^2 sum 1/(n(n^2+y^2))]
// asymptotic: -2a [2 gamma_E + ln(a x) + sum (-1)^{n-1} B_{2n}/(2n y^{2n})]
// with y = a/2k; the asymptotic form requires y >= 5.
DeltaCorrection delta_correction(const PhysicalParams& params, double x, DeltaForm form,
                                 int terms = 10000);

}  // namespace coulomb1d::extensions
