#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace coulomb1d {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Error hierarchy. Every precondition violation or numerical failure is
// reported through one of these; NaN/Inf is never returned silently.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleError : Error {          // evaluation at a pole of Gamma/psi or a
  using Error::Error;               // forbidden integer parameter
};
struct OverflowError : Error {
  using Error::Error;
};
struct ConvergenceError : Error {   // series exhausted its term budget
  using Error::Error;
};
struct AccuracyError : Error {      // requested tolerance unreachable in the
  using Error::Error;               // configured region/precision
};
struct DomainError : Error {        // argument outside the operation's domain
  using Error::Error;
};
struct SingularSystemError : Error {
  using Error::Error;
};
struct PrecisionError : Error {     // reference evaluator cannot certify the
  using Error::Error;               // requested number of digits
};

inline bool is_finite(Cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Cplx require_finite(Cplx z, const char* what) {
  if (!is_finite(z)) throw OverflowError(std::string(what) + ": non-finite value");
  return z;
}

// Principal-branch log, arg in (-pi, pi].  std::log already lands there for
// all non-real arguments; the negative real axis gets +i pi as required.
inline Cplx log_principal(Cplx z) {
  if (z == Cplx(0.0, 0.0)) throw DomainError("log_principal: z = 0");
  double a = std::arg(z);
  if (a == -kPi) a = kPi;  // arg convention: (-pi, pi]
  return Cplx(std::log(std::abs(z)), a);
}

// z^w = exp(w log z) on the principal branch.
inline Cplx pow_principal(Cplx z, Cplx w) {
  if (z == Cplx(0.0, 0.0)) {
    if (w.real() > 0.0) return {0.0, 0.0};
    throw DomainError("pow_principal: 0^w with Re w <= 0");
  }
  return std::exp(w * log_principal(z));
}

inline double sign_function(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Evaluation policy for the confluent-function kernels.  Thresholds select
// between the logarithmic expansion, an extended-precision bridge and the
// large-|z| asymptotic series.
struct EvalPolicy {
  int series_max_terms = 500;
  double series_rel_tol = 1e-15;
  double asymptotic_threshold = 30.0;    // |z| above which the Poincare series is used
  double log_expansion_threshold = 8.0;  // |z| below which plain double suffices

  void validate() const {
    if (series_rel_tol <= 0) throw DomainError("EvalPolicy: series_rel_tol must be > 0");
    if (series_max_terms < 1) throw DomainError("EvalPolicy: series_max_terms must be >= 1");
    if (!(log_expansion_threshold < asymptotic_threshold))
      throw DomainError("EvalPolicy: log_expansion_threshold must be < asymptotic_threshold");
  }
};

inline const EvalPolicy& default_policy() {
  static const EvalPolicy p{};
  return p;
}

}  // namespace coulomb1d
