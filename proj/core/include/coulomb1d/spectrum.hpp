#pragma once

// Bound states: simple zeros of the bound-axis coefficient A_R^(b) located on
// the positive imaginary momentum axis, k = i kappa.

#include <string>
#include <vector>

#include "coulomb1d/scattering.hpp"

namespace coulomb1d::spectrum {

struct BoundState {
  int n = 0;
  double kappa = 0.0;    // located zero, k = i kappa
  double E = 0.0;        // -kappa^2
  double residual = 0.0; // |A_R^(b)| at the located zero
};

// A_R^(b)(k) = (2 pi k/alpha) Gamma^{-2}(i alpha/2k) e^{pi alpha/2k} cosech(pi alpha/2k),
// evaluated through the reflection form sin(pi y) Gamma^2(1-y) so the zeros at
// i alpha/2k = -n are exact and simple.  PoleError where cosech hits a pole
// (positive integer y, alpha > 0).
Cplx a_r_bound(const scattering::PhysicalParams& params);

struct SpectrumResult {
  std::vector<BoundState> states;
  std::string note;  // explanation when the spectrum is empty
};

// analytic levels kappa_n = |alpha|/2n verified one by one with a
// bisection-then-secant zero finder on Re A_R^(b) along the imaginary axis
SpectrumResult bound_spectrum(double alpha, int n_max);

// diagnostic: sign changes of Re A_R^(b) over a kappa grid (completeness of
// the level sequence is not asserted; the real restriction also vanishes on
// the cos phase between levels)
std::vector<std::pair<double, double>> wide_scan_sign_changes(double alpha,
                                                              double kappa_min,
                                                              double kappa_max,
                                                              int grid_points);

}  // namespace coulomb1d::spectrum
