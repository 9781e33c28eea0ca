#include "coulomb1d/confluent.hpp"

#include <cmath>
#include <limits>

#include "coulomb1d/ddouble.hpp"
#include "coulomb1d/gamma.hpp"

namespace coulomb1d::specfun {

namespace {

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_integer_ge(Cplx z, double low) {
  return z.imag() == 0.0 && z.real() >= low && z.real() == std::floor(z.real());
}

// Kummer series with cancellation bookkeeping.  Returns the sum; *peak is the
// largest partial-term magnitude encountered (relative damage = eps*peak/|sum|).
Cplx kummer_series(Cplx a, Cplx c, Cplx z, const EvalPolicy& pol, double* peak) {
  Cplx term(1.0, 0.0), sum(1.0, 0.0);
  double mx = 1.0;
  int quiet = 0;
  for (int s = 0; s < pol.series_max_terms; ++s) {
    term *= (a + double(s)) * z / ((c + double(s)) * double(s + 1));
    sum += term;
    double at = std::abs(term);
    mx = std::max(mx, at);
    if (at < pol.series_rel_tol * std::abs(sum)) {
      if (++quiet >= 3) {
        if (peak) *peak = mx;
        return sum;
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within the term budget");
}

DDComplex kummer_series_dd(DDComplex a, DDComplex c, DDComplex z, const EvalPolicy& pol,
                           double* peak) {
  DDComplex one(1.0, 0.0);
  DDComplex term = one, sum = one;
  double mx = 1.0;
  int quiet = 0;
  for (int s = 0; s < pol.series_max_terms; ++s) {
    DDComplex ds(double(s), 0.0), d1(double(s + 1), 0.0);
    term = term * (a + ds) * z / ((c + ds) * d1);
    sum += term;
    double at = double(dd_cabs(term));
    mx = std::max(mx, at);
    if (at < 1e-30 * double(dd_cabs(sum))) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (s == pol.series_max_terms - 1)
      throw ConvergenceError("kummer series (dd) did not converge");
  }
  if (peak) *peak = mx;
  return sum;
}

DDComplex to_dd(Cplx z) { return DDComplex(DDouble(z.real()), DDouble(z.imag())); }
Cplx to_cplx(DDComplex z) { return {double(z.re), double(z.im)}; }

}  // namespace

Cplx kummer_m(Cplx a, Cplx c, Cplx z, const EvalPolicy& policy) {
  policy.validate();
  if (is_nonpositive_integer(c)) throw PoleError("kummer_m: c must not be 0,-1,-2,...");
  if (z == Cplx(0.0, 0.0)) return {1.0, 0.0};
  double peak = 1.0;
  Cplx sum = kummer_series(a, c, z, policy, &peak);
  // retry at extended precision when cancellation ate the requested digits
  double damage = std::numeric_limits<double>::epsilon() * peak /
                  std::max(std::abs(sum), 1e-300);
  if (damage > policy.series_rel_tol) {
    DDComplex s = kummer_series_dd(to_dd(a), to_dd(c), to_dd(z), policy, &peak);
    double damage_dd = 1e-31 * peak / std::max(double(dd_cabs(s)), 1e-300);
    if (damage_dd > policy.series_rel_tol)
      throw AccuracyError("kummer_m: cancellation exceeds tolerance even at extended precision");
    return to_cplx(s);
  }
  return require_finite(sum, "kummer_m");
}

Cplx kummer_n(Cplx a, Cplx c, Cplx z, const EvalPolicy& policy) {
  if (is_integer_ge(c, 2.0)) throw PoleError("kummer_n: c must not be 2,3,4,...");
  Cplx one_minus_c = 1.0 - c;
  if (z == Cplx(0.0, 0.0)) {
    if (one_minus_c.real() < 0.0) throw DomainError("kummer_n: z = 0 with Re(1-c) < 0");
    if (one_minus_c == Cplx(0.0, 0.0)) return kummer_m(a, c, z, policy);
  }
  return pow_principal(z, one_minus_c) * kummer_m(1.0 + a - c, 2.0 - c, z, policy);
}

namespace detail {

Cplx u_log_expansion(Cplx a, int r, Cplx z, Cplx lnz, const EvalPolicy& pol,
                     double* accuracy_estimate) {
  // (valid for r >= 1)  U(a,r,z) = sum_{s=1}^{r-1} (-1)^{s-1} lam_{r,-s}(s-1)!/z^s
  //                     + lam_{r,0} M(a,r,z) ln z + sum_s lam_{r,s} mu_{r,s} z^s/s!
  const Cplx rg = reciprocal_gamma(1.0 + a - Cplx(double(r)));
  const double sgn_r = (r % 2 == 0) ? 1.0 : -1.0;
  double peak = 0.0;

  // negative-power block
  Cplx pole_sum(0.0, 0.0);
  if (r >= 2) {
    double fact_s1 = 1.0;     // (s-1)!
    double fact_rs1 = 1.0;    // (r-s-1)!
    for (int j = 1; j <= r - 2; ++j) fact_rs1 *= j;
    Cplx gratio(1.0, 0.0);    // Gamma(a-s)/Gamma(a)
    Cplx zp = z;
    for (int s = 1; s <= r - 1; ++s) {
      gratio /= (a - double(s));
      if (s > 1) {
        fact_s1 *= (s - 1);
        fact_rs1 /= (r - s);  // moves (r-s-1)! down one step
      }
      Cplx lam = sgn_r * gratio * rg / fact_rs1;
      Cplx t = ((s % 2 == 1) ? 1.0 : -1.0) * lam * fact_s1 / zp;
      pole_sum += t;
      peak = std::max(peak, std::abs(t));
      zp *= z;
    }
  }

  // log block
  double mpeak = 0.0;
  Cplx mval = kummer_series(a, Cplx(double(r)), z, pol, &mpeak);
  double fact_r1 = 1.0;
  for (int j = 1; j <= r - 1; ++j) fact_r1 *= j;
  Cplx lam0 = sgn_r * rg / fact_r1;
  Cplx log_term = lam0 * mval * lnz;
  peak = std::max(peak, std::abs(lam0) * std::abs(lnz) * mpeak);

  // digamma block, with the psi recurrences amortizing the per-term cost
  if (is_nonpositive_integer(a))
    throw PoleError("tricomi_u: logarithmic expansion degenerates at non-positive integer a");
  Cplx mu = digamma(a) - digamma(Cplx(1.0)) - digamma(Cplx(double(r)));
  Cplx coef = lam0;  // lam_{r,s} z^s / s!
  Cplx dig_sum(0.0, 0.0);
  int quiet = 0;
  for (int s = 0; s < pol.series_max_terms; ++s) {
    Cplx t = coef * mu;
    dig_sum += t;
    peak = std::max(peak, std::abs(t));
    if (std::abs(coef) * (std::abs(mu) + 1.0) <
        pol.series_rel_tol * (std::abs(dig_sum) + std::abs(log_term))) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (s == pol.series_max_terms - 1)
      throw ConvergenceError("tricomi_u: logarithmic expansion did not converge");
    Cplx as = a + double(s);
    if (is_nonpositive_integer(as))
      throw PoleError("tricomi_u: psi recurrence hit a pole (integer a + s)");
    mu += 1.0 / as - 1.0 / double(1 + s) - 1.0 / double(r + s);
    coef *= as * z / (double(r + s) * double(s + 1));
  }

  Cplx u = pole_sum + log_term + dig_sum;
  if (accuracy_estimate)
    *accuracy_estimate = std::numeric_limits<double>::epsilon() * peak /
                         std::max(std::abs(u), 1e-300);
  return require_finite(u, "tricomi_u (log expansion)");
}

Cplx u_log_expansion_dd(Cplx a_, int r, Cplx z_, Cplx lnz_, const EvalPolicy& pol,
                        double* accuracy_estimate) {
  const DDComplex a = to_dd(a_), z = to_dd(z_);
  // The double-precision branch datum cannot feed the cancelling blocks
  // directly: rebuild the log at working precision with the same winding.
  const DDComplex lnz = [&] {
    DDComplex cl = dd_clog(z);
    double winding = std::round((lnz_.imag() - double(cl.im)) / kPi);
    return DDComplex{cl.re, cl.im + dd_pi * DDouble(winding)};
  }();
  const DDComplex one(1.0, 0.0);
  const DDComplex rg = dd_reciprocal_gamma(a + DDComplex(1.0 - double(r), 0.0));
  const double sgn_r = (r % 2 == 0) ? 1.0 : -1.0;
  double peak = 0.0;

  DDComplex pole_sum(0.0, 0.0);
  if (r >= 2) {
    double fact_s1 = 1.0, fact_rs1 = 1.0;
    for (int j = 1; j <= r - 2; ++j) fact_rs1 *= j;
    DDComplex gratio = one;
    DDComplex zp = z;
    for (int s = 1; s <= r - 1; ++s) {
      gratio /= (a - DDComplex(double(s), 0.0));
      if (s > 1) {
        fact_s1 *= (s - 1);
        fact_rs1 /= (r - s);
      }
      DDComplex lam = DDComplex(sgn_r, 0.0) / DDComplex(fact_rs1, 0.0) * gratio * rg;
      DDComplex t = DDComplex(((s % 2 == 1) ? 1.0 : -1.0) * fact_s1, 0.0) * lam / zp;
      pole_sum += t;
      peak = std::max(peak, double(dd_cabs(t)));
      zp *= z;
    }
  }

  double mpeak = 0.0;
  DDComplex mval = kummer_series_dd(a, DDComplex(double(r), 0.0), z, pol, &mpeak);
  double fact_r1 = 1.0;
  for (int j = 1; j <= r - 1; ++j) fact_r1 *= j;
  DDComplex lam0 = DDComplex(sgn_r, 0.0) / DDComplex(fact_r1, 0.0) * rg;
  DDComplex log_term = lam0 * mval * lnz;
  peak = std::max(peak, double(dd_cabs(lam0)) * double(dd_cabs(lnz)) * mpeak);

  if (is_nonpositive_integer(a_))
    throw PoleError("tricomi_u: logarithmic expansion degenerates at non-positive integer a");
  DDComplex mu = dd_digamma(a) - dd_digamma(one) - dd_digamma(DDComplex(double(r), 0.0));
  DDComplex coef = lam0;
  DDComplex dig_sum(0.0, 0.0);
  int quiet = 0;
  for (int s = 0; s < 4 * pol.series_max_terms; ++s) {
    DDComplex t = coef * mu;
    dig_sum += t;
    peak = std::max(peak, double(dd_cabs(t)));
    if (double(dd_cabs(coef)) * (double(dd_cabs(mu)) + 1.0) <
        1e-31 * (double(dd_cabs(dig_sum)) + double(dd_cabs(log_term)))) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (s == 4 * pol.series_max_terms - 1)
      throw ConvergenceError("tricomi_u (dd): logarithmic expansion did not converge");
    DDComplex as = a + DDComplex(double(s), 0.0);
    // the reciprocals must carry full working precision: they feed terms of
    // magnitude up to the series peak
    mu += one / as - one / DDComplex(double(1 + s), 0.0) -
          one / DDComplex(double(r + s), 0.0);
    coef = coef * as * z / DDComplex(double(r + s) * double(s + 1), 0.0);
  }

  DDComplex u = pole_sum + log_term + dig_sum;
  double est = 1e-31 * peak / std::max(double(dd_cabs(u)), 1e-300);
  if (accuracy_estimate) *accuracy_estimate = est;
  return to_cplx(u);
}

Cplx u_asymptotic(Cplx a, Cplx c, Cplx z, Cplx lnz, const EvalPolicy& pol,
                  double* accuracy_estimate) {
  // (a7): U ~ z^{-a} sum_s (-1)^s (a)_s (1+a-c)_s / (s! z^s), optimally truncated
  Cplx term(1.0, 0.0), sum(1.0, 0.0);
  double best = 1.0;
  for (int s = 0; s < pol.series_max_terms; ++s) {
    Cplx next = term * (-(a + double(s)) * (1.0 + a - c + double(s)) / (double(s + 1) * z));
    double an = std::abs(next);
    if (an >= std::abs(term) && s > 2) break;  // divergence onset
    term = next;
    sum += term;
    best = std::min(best, an / std::max(std::abs(sum), 1e-300));
    if (an < 0.05 * pol.series_rel_tol * std::abs(sum)) break;
  }
  if (accuracy_estimate) *accuracy_estimate = best;
  return std::exp(-a * lnz) * sum;
}

Cplx tricomi_u_on_branch(Cplx a, int c, Cplx z, Cplx lnz, const EvalPolicy& pol) {
  pol.validate();
  if (z == Cplx(0.0, 0.0)) throw DomainError("tricomi_u: z = 0");
  if (c < 1) {
    // Kummer transformation reduces to c' = 2 - c >= 2.  Only c = 2 is exercised
    // by the physics; integer c <= 0 is provided on a best-effort basis.
    return std::exp((1.0 - double(c)) * lnz) *
           tricomi_u_on_branch(1.0 + a - double(c), 2 - c, z, lnz, pol);
  }
  const double az = std::abs(z);
  if (az >= pol.asymptotic_threshold) {
    double acc = 1.0;
    Cplx u = u_asymptotic(a, Cplx(double(c)), z, lnz, pol, &acc);
    if (acc <= 1e-10) return require_finite(u, "tricomi_u (asymptotic)");
    if (az <= 55.0) {
      Cplx ud = u_log_expansion_dd(a, c, z, lnz, pol, &acc);
      if (acc <= 1e-10) return ud;
    }
    throw AccuracyError("tricomi_u: requested tolerance unreachable at this |z|");
  }
  if (az > pol.log_expansion_threshold) {
    double acc = 1.0;
    Cplx u = u_log_expansion_dd(a, c, z, lnz, pol, &acc);
    if (acc > std::max(pol.series_rel_tol, 1e-13))
      throw AccuracyError("tricomi_u: gap-region precision cannot meet tolerance");
    return u;
  }
  double acc = 1.0;
  Cplx u = u_log_expansion(a, c, z, lnz, pol, &acc);
  if (acc > std::max(pol.series_rel_tol, 1e-14))
    return u_log_expansion_dd(a, c, z, lnz, pol, nullptr);
  return u;
}

}  // namespace detail

Cplx tricomi_u(Cplx a, int c, Cplx z, const EvalPolicy& policy) {
  return detail::tricomi_u_on_branch(a, c, z, log_principal(z), policy);
}

Cplx vee(Cplx a, int c, Cplx z, const EvalPolicy& policy) {
  Cplx mz = -z;
  return std::exp(z) * detail::tricomi_u_on_branch(Cplx(double(c)) - a, c, mz,
                                                   log_principal(mz), policy);
}

Cplx whittaker(WhittakerKind kind, Cplx p, Cplx m, Cplx z, const EvalPolicy& policy) {
  const Cplx c = 2.0 * m + 1.0;
  const Cplx a = m - p + 0.5;
  switch (kind) {
    case WhittakerKind::M: {
      if (is_nonpositive_integer(2.0 * m + 1.0) && 2.0 * m != Cplx(0.0, 0.0))
        throw PoleError("whittaker M: 2m must not be -1,-2,...");
      if (z == Cplx(0.0, 0.0)) {
        if ((m + 0.5).real() > 0.0) return {0.0, 0.0};
        throw DomainError("whittaker M: z = 0 with Re(m+1/2) <= 0");
      }
      return std::exp(-0.5 * z) * pow_principal(z, m + 0.5) * kummer_m(a, c, z, policy);
    }
    case WhittakerKind::W: {
      if (z == Cplx(0.0, 0.0)) throw DomainError("whittaker W: z = 0");
      if (is_integer_ge(c, -100.0)) {
        return std::exp(-0.5 * z) * pow_principal(z, m + 0.5) *
               tricomi_u(a, int(std::lround(c.real())), z, policy);
      }
      // generic m: M-basis connection; ill-conditioned near half-integer m
      Cplx w = gamma_complex(-2.0 * m) * reciprocal_gamma(0.5 - m - p) *
                   whittaker(WhittakerKind::M, p, m, z, policy) +
               gamma_complex(2.0 * m) * reciprocal_gamma(0.5 + m - p) *
                   whittaker(WhittakerKind::M, p, -m, z, policy);
      return require_finite(w, "whittaker W");
    }
    case WhittakerKind::V: {
      if (z == Cplx(0.0, 0.0)) throw DomainError("whittaker V: z = 0");
      if (is_integer_ge(c, -100.0)) {
        Cplx mz = -z;
        // e^{-z/2} z^{m+1/2} e^z U(c-a, c, -z) with principal -z
        return std::exp(0.5 * z) * pow_principal(z, m + 0.5) *
               detail::tricomi_u_on_branch(c - a, int(std::lround(c.real())), mz,
                                           log_principal(mz), policy);
      }
      Cplx v = gamma_complex(-2.0 * m) * reciprocal_gamma(0.5 - m + p) *
                   whittaker(WhittakerKind::M, p, m, z, policy) +
               gamma_complex(2.0 * m) * std::exp(Cplx(0.0, -2.0 * kPi) * m) *
                   reciprocal_gamma(0.5 + m + p) *
                   whittaker(WhittakerKind::M, p, -m, z, policy);
      return require_finite(v, "whittaker V");
    }
  }
  throw DomainError("whittaker: unknown kind");
}

WronskianResult numeric_wronskian(const std::function<Cplx(Cplx)>& f,
                                  const std::function<Cplx(Cplx)>& g, Cplx z,
                                  double h) {
  if (h <= 0.0) throw DomainError("numeric_wronskian: h must be > 0");
  auto deriv = [&](const std::function<Cplx(Cplx)>& fn, double step, Cplx& err) {
    auto d = [&](double hh) {
      Cplx a = fn(z + Cplx(hh, 0.0)), b = fn(z - Cplx(hh, 0.0));
      if (!is_finite(a) || !is_finite(b))
        throw Error("numeric_wronskian: non-finite sample near z");
      return (a - b) / (2.0 * hh);
    };
    Cplx d1 = d(step), d2 = d(step / 2.0);
    Cplx rich = (4.0 * d2 - d1) / 3.0;
    err = rich - d2;
    return rich;
  };
  Cplx ef, eg;
  Cplx fp = deriv(f, h, ef);
  Cplx gp = deriv(g, h, eg);
  Cplx f0 = f(z), g0 = g(z);
  if (!is_finite(f0) || !is_finite(g0))
    throw Error("numeric_wronskian: non-finite sample at z");
  Cplx w = f0 * gp - fp * g0;
  double err = std::abs(f0) * std::abs(eg) + std::abs(g0) * std::abs(ef);
  return {w, err};
}

}  // namespace coulomb1d::specfun
