#include "coulomb1d/extensions.hpp"

#include <cmath>

#include "coulomb1d/gamma.hpp"

namespace coulomb1d::extensions {

ExtensionParams real_extension_params(const PhysicalParams& params) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("real_extension_params: alpha = 0");
  ExtensionParams ext;
  ext.v_minus_minus_V = 0.0;
  ext.v_plus_minus_V = scattering::detail::real_v_plus_minus_V(params);
  ext.v_plus_plus_W = scattering::detail::real_v_plus_plus_W(params);
  ext.v_minus_plus_W = 0.0;  // unconstrained by the boundary system
  return ext;
}

DeltaCorrection delta_correction(const PhysicalParams& params, double x, DeltaForm form,
                                 int terms) {
  params.validate();
  if (params.alpha == 0.0) throw DomainError("delta_correction: alpha = 0");
  if (x <= 0.0) throw DomainError("delta_correction: x must be > 0");
  const double a = params.alpha;
  const double g = kEulerGamma;

  DeltaCorrection out;
  out.x = x;
  out.form = form;

  if (form == DeltaForm::closed) {
    // sqrt(k^2) on the principal branch: |k| on the scattering axis, i kappa
    // on the bound axis (the ln then contributes its real part only)
    Cplx sqrt_k2 = std::sqrt(params.k * params.k);
    double ln_term = log_principal(2.0 * sqrt_k2 * x).real();
    double re_psi = specfun::dd_digamma(DDComplex(DDouble(params.iy().real()),
                                                  DDouble(params.iy().imag())))
                        .re.hi;
    // on the scattering axis iy is purely imaginary; Re psi(i y) it is
    if (params.arg2k == scattering::Arg2k::scattering) {
      double y = a / (2.0 * params.k.real());
      re_psi = specfun::digamma(Cplx(0.0, y)).real();
    }
    out.coefficient = -2.0 * a * (2.0 * g + ln_term + re_psi);
    out.terms = 0;
    out.tail_estimate = 0.0;
    return out;
  }

  if (params.arg2k != scattering::Arg2k::scattering)
    throw DomainError("delta_correction: series/asymptotic forms require arg 2k = 0");
  const double k = params.k.real();
  const double y = a / (2.0 * k);

  if (form == DeltaForm::series) {
    if (terms < 1) throw DomainError("delta_correction: terms must be >= 1");
    auto s = specfun::re_digamma_imag(y, specfun::ReDigammaMode::series, terms);
    // s.value = -gamma_E + y^2 sum; (60) wants gamma_E + ln + y^2 sum
    out.coefficient = -2.0 * a * (g + std::log(2.0 * k * x) + (s.value + g));
    out.terms = terms;
    out.tail_estimate = 2.0 * std::abs(a) * s.tail_bound;
    return out;
  }

  // asymptotic (low-energy) form
  if (y < 5.0)
    throw DomainError("delta_correction: asymptotic form requires alpha/2k >= 5");
  int nterms = std::min(terms, 15);
  auto s = specfun::re_digamma_imag(y, specfun::ReDigammaMode::asymptotic, nterms);
  // s.value = ln y + Bernoulli sum; (61) wants 2 gamma_E + ln(a x) + Bernoulli sum
  out.coefficient = -2.0 * a * (2.0 * g + std::log(a * x) + (s.value - std::log(y)));
  out.terms = s.terms_used;
  out.tail_estimate = 2.0 * std::abs(a) * s.tail_bound;
  return out;
}

}  // namespace coulomb1d::extensions
