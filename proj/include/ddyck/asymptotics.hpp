#pragma once

/// Dominant singularity of the d = -1 counting series and the resulting
/// asymptotic estimate of r(n). Floating point is quarantined here: exact
/// values from the recurrence engines convert to high-precision reals at
/// this boundary, and everything runs in software arithmetic (rho^{-n} for
/// n = 400 has over 200 digits of magnitude).

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ddyck/numeric.hpp"

namespace ddyck {

/// 130 decimal digits of working precision; requested output precision is
/// capped below that so guard digits always remain.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<130>>;

inline constexpr int kMaxRhoDigits = 110;

inline Real real_pi() {
  static const Real pi = 4 * atan(Real(1));
  return pi;
}

inline Real to_real(const Int& v) { return Real(v); }

/// The quartic 1 - 4x + 2x^2 + x^4 whose smallest positive real root is
/// the dominant singularity rho.
inline Real rho_quartic(const Real& x) { return 1 - 4 * x + 2 * x * x + x * x * x * x; }

/// Closed radical form:
///   rho = (-1 - 4*2^(2/3)/cbrt(13 + 3 sqrt 33) + cbrt(2 (13 + 3 sqrt 33))) / 3.
inline Real rho_closed_form() {
  const Real third = Real(1) / 3;
  const Real s33 = sqrt(Real(33));
  const Real c = pow(13 + 3 * s33, third);
  return (Real(-1) - 4 * pow(Real(2), 2 * third) / c + pow(2 * (13 + 3 * s33), third)) / 3;
}

/// Root of the quartic by bisection on [1/4, 1/3] followed by Newton polish.
inline Real rho_by_bisection_newton() {
  Real lo = Real(1) / 4, hi = Real(1) / 3;
  for (int i = 0; i < 64; ++i) {
    Real mid = (lo + hi) / 2;
    if (rho_quartic(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  Real x = (lo + hi) / 2;
  for (int i = 0; i < 16; ++i) {
    Real fp = -4 + 4 * x + 4 * x * x * x;
    x -= rho_quartic(x) / fp;
  }
  return x;
}

struct SingularityData {
  Real rho;
  Real amplitude;  // sqrt(rho (4 - 4 rho - 4 rho^3)) / (4 (-1 + 4 rho - 2 rho^2))
};

/// Computes rho two independent ways and requires agreement to the asked
/// precision before deriving the asymptotic amplitude.
inline SingularityData compute_rho(int precision_digits = 50) {
  if (precision_digits < 6)
    throw std::invalid_argument("compute_rho: precision must be at least 6 digits");
  if (precision_digits > kMaxRhoDigits)
    throw std::invalid_argument("compute_rho: precision capped at 110 digits");
  const Real closed = rho_closed_form();
  const Real iterated = rho_by_bisection_newton();
  const Real tol = pow(Real(10), -precision_digits);
  if (abs(closed - iterated) > tol)
    throw std::logic_error("compute_rho: closed form and root-finder disagree");
  if (abs(rho_quartic(closed)) > tol)
    throw std::logic_error("compute_rho: quartic residual too large");
  const Real rho = closed;
  const Real amplitude =
      sqrt(rho * (4 - 4 * rho - 4 * rho * rho * rho)) / (4 * (-1 + 4 * rho - 2 * rho * rho));
  return {rho, amplitude};
}

/// r(n) ~ rho^{-n} / sqrt(n^3 pi) * amplitude.
inline Real r_asymptotic(long long n, const SingularityData& s) {
  if (n < 1) throw std::invalid_argument("r_asymptotic requires n >= 1");
  const Real nn(n);
  return pow(s.rho, -static_cast<int>(n)) / sqrt(nn * nn * nn * real_pi()) * s.amplitude;
}

inline Real r_asymptotic(long long n) {
  static const SingularityData data = compute_rho();
  return r_asymptotic(n, data);
}

inline Real relative_error(const Real& estimate, const Real& exact) {
  return abs(estimate / exact - 1);
}

}  // namespace ddyck
