#include "coulomb1d/spectrum.hpp"

#include <cmath>

#include "coulomb1d/gamma.hpp"

namespace coulomb1d::spectrum {

namespace {

const Cplx kI(0.0, 1.0);

double re_a_r_bound(double alpha, double kappa) {
  return a_r_bound(scattering::PhysicalParams::bound_axis(alpha, kappa)).real();
}

}  // namespace

Cplx a_r_bound(const scattering::PhysicalParams& params) {
  params.validate();
  if (params.arg2k != scattering::Arg2k::bound)
    throw DomainError("a_r_bound: requires arg 2k = pi/2 (k = i kappa)");
  if (params.alpha == 0.0) throw DomainError("a_r_bound: alpha = 0");
  const double kappa = params.k.imag();
  const double y = params.alpha / (2.0 * kappa);  // = i alpha/2k, real here
  if (y > 0.0 && y == std::floor(y))
    throw PoleError("a_r_bound: cosech pole at pi alpha/2k in i pi Z");
  // 1/Gamma^2(y) cosech(pi alpha/2k):  with pi alpha/2k = -i pi y,
  // cosech(-i pi y) = i / sin(pi y) and 1/Gamma(y) = sin(pi y) Gamma(1-y)/pi,
  // so the sin cancels once and the zeros at y = -n stay simple and exact.
  const Cplx g1my = specfun::gamma_complex(Cplx(1.0 - y, 0.0));
  const Cplx pref = 2.0 * kPi * params.k / params.alpha;
  const Cplx phase = std::exp(kPi * params.alpha / (2.0 * params.k));
  const double spy = std::sin(kPi * (y - std::round(y))) *
                     ((std::fmod(std::abs(std::round(y)), 2.0) == 0.0) ? 1.0 : -1.0);
  return pref * phase * kI * spy * g1my * g1my / (kPi * kPi);
}

SpectrumResult bound_spectrum(double alpha, int n_max) {
  if (n_max < 1) throw DomainError("bound_spectrum: n_max must be >= 1");
  SpectrumResult result;
  if (alpha >= 0.0) {
    result.note = "no bound states: the spectrum condition i alpha/2k = -n has "
                  "solutions on the positive imaginary axis only for alpha < 0";
    return result;
  }
  for (int n = 1; n <= n_max; ++n) {
    const double kn = std::abs(alpha) / (2.0 * n);
    double lo = kn * (1.0 - 0.3 / n);
    double hi = kn * (1.0 + 0.3 / n);
    double flo = re_a_r_bound(alpha, lo);
    double fhi = re_a_r_bound(alpha, hi);
    if (!(flo * fhi < 0.0))
      throw Error("bound_spectrum: zero not bracketed for n = " + std::to_string(n));
    // bisection to ~1e-12 relative, then secant polish
    for (int it = 0; it < 48; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = re_a_r_bound(alpha, mid);
      if (fm == 0.0) { lo = hi = mid; break; }
      if (flo * fm < 0.0) { hi = mid; fhi = fm; }
      else { lo = mid; flo = fm; }
    }
    double x0 = lo, x1 = hi;
    double f0 = flo, f1 = fhi;
    for (int it = 0; it < 4 && f1 != f0 && x0 != x1; ++it) {
      double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
      if (!std::isfinite(x2) || x2 <= 0.0) break;
      x0 = x1; f0 = f1;
      x1 = x2; f1 = re_a_r_bound(alpha, x1);
    }
    BoundState st;
    st.n = n;
    st.kappa = x1;
    st.E = -x1 * x1;
    st.residual = std::abs(a_r_bound(scattering::PhysicalParams::bound_axis(alpha, x1)));
    result.states.push_back(st);
  }
  return result;
}

std::vector<std::pair<double, double>> wide_scan_sign_changes(double alpha,
                                                              double kappa_min,
                                                              double kappa_max,
                                                              int grid_points) {
  if (!(kappa_min > 0.0) || !(kappa_max > kappa_min) || grid_points < 2)
    throw DomainError("wide_scan_sign_changes: bad scan range");
  std::vector<std::pair<double, double>> intervals;
  double prev_x = kappa_min;
  double prev_f = re_a_r_bound(alpha, prev_x);
  for (int i = 1; i < grid_points; ++i) {
    double x = kappa_min + (kappa_max - kappa_min) * double(i) / double(grid_points - 1);
    double f = re_a_r_bound(alpha, x);
    if (prev_f * f < 0.0) intervals.emplace_back(prev_x, x);
    prev_x = x;
    prev_f = f;
  }
  return intervals;
}

}  // namespace coulomb1d::spectrum
