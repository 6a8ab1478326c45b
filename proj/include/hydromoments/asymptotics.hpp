#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hydromoments/result.hpp"
#include "hydromoments/specfun/gamma.hpp"

namespace hydromoments {

enum class Regime { Rydberg, HighD };

inline std::string_view to_string(Regime r) { return r == Regime::Rydberg ? "Rydberg" : "HighD"; }

/// Large-n or large-D estimate of a moment. `corrected` includes the first-order
/// correction factor when one is known and equals `leading` otherwise.
struct AsymptoticEstimate {
  double leading = 0.0;
  double corrected = 0.0;
  Regime regime = Regime::Rydberg;
  std::string constraints;
};

enum class RydbergFamily { Circular, NS };

namespace detail {

inline AsymptoticEstimate estimate(double leading, double corrected, Regime regime, std::string constraints) {
  return {leading, corrected, regime, std::move(constraints)};
}

inline std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace detail

/// Gamma(x+a)/Gamma(x+b) ~ x^(a-b) [1 + (a-b)(a+b-1)/(2x)].
inline double gamma_ratio_asym(double x, double a, double b) {
  return std::pow(x, a - b) * (1.0 + (a - b) * (a + b - 1.0) / (2.0 * x));
}

/// Rydberg <r^alpha>. For alpha > -3/2:
///   (eta^2/Z)^alpha 2^(alpha+1) Gamma(alpha+3/2) / (sqrt(pi) Gamma(alpha+2)).
/// For alpha = -beta with 3/2 < beta < 2L+3:
///   Z^beta / eta^3 Gamma(2L-beta+3)/Gamma(2L+beta) 2^(3beta-5) Gamma(beta-3/2) / (sqrt(pi) Gamma(beta-1)).
inline AsymptoticEstimate rydberg_r(double alpha, const HydrogenicState& state) {
  const double Z = state.Z(), eta = state.eta_d(), L = state.L_d();
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  if (alpha > -1.5) {
    const double v = std::exp(alpha * std::log(eta * eta / Z) + (alpha + 1.0) * std::numbers::ln2 +
                              log_gamma(alpha + 1.5) - log_sqrt_pi - log_gamma(alpha + 2.0));
    return detail::estimate(v, v, Regime::Rydberg, "alpha > -3/2");
  }
  const double beta = -alpha;
  if (beta > 1.5 && beta < 2.0 * L + 3.0) {
    const double v = std::pow(Z, beta) / (eta * eta * eta) *
                     std::exp(log_gamma(2.0 * L - beta + 3.0) - log_gamma(2.0 * L + beta) +
                              (3.0 * beta - 5.0) * std::numbers::ln2 - log_sqrt_pi +
                              log_gamma(beta - 1.5) - log_gamma(beta - 1.0));
    return detail::estimate(v, v, Regime::Rydberg, "3/2 < -alpha < 2L+3 = " + detail::fmt(2.0 * L + 3.0));
  }
  throw Error(ErrorCode::OrderOutOfRegime,
              "Rydberg <r^alpha> needs alpha > -3/2 or 3/2 < -alpha < 2L+3, got " + detail::fmt(alpha));
}

/// Rydberg <p^alpha> ~ (Z/n)^alpha (2/pi) Gamma((alpha+1)/2) Gamma((3-alpha)/2), -1 < alpha < 3;
/// at alpha = 1 this is 2Z/(pi n).
inline AsymptoticEstimate rydberg_p(double alpha, int n, double Z) {
  if (!(alpha > -1.0 && alpha < 3.0)) {
    throw Error(ErrorCode::OrderOutOfRegime, "Rydberg <p^alpha> is known only for -1 < alpha < 3");
  }
  if (n < 1) throw Error(ErrorCode::QuantumNumberOutOfRange, "n must be at least 1");
  const double scale = std::pow(Z / n, alpha);
  const double v = alpha == 1.0 ? 2.0 * Z / (std::numbers::pi * n)
                                : scale * 2.0 / std::numbers::pi * std::tgamma((alpha + 1.0) / 2.0) *
                                      std::tgamma((3.0 - alpha) / 2.0);
  return detail::estimate(v, v, Regime::Rydberg, "-1 < alpha < 3");
}

/// Three-dimensional circular states: (Z/n)^alpha (1 + alpha(alpha-2)/(4n)).
inline AsymptoticEstimate rydberg_circular_p(double alpha, int n, double Z) {
  if (n < 1) throw Error(ErrorCode::QuantumNumberOutOfRange, "n must be at least 1");
  const double leading = std::pow(Z / n, alpha);
  return detail::estimate(leading, leading * (1.0 + alpha * (alpha - 2.0) / (4.0 * n)), Regime::Rydberg,
                          "D = 3, l = n-1");
}

/// Three-dimensional <p^-1> at large n.
///   Circular:  (n/Z)(1 + 3/(4n)).
///   nS:        (4n/(pi Z)) [log 4n + gamma - 1/2 - 1/(2n) - 1/(12 n^2)].
inline AsymptoticEstimate rydberg_inverse_p(int n, double Z, RydbergFamily family) {
  if (n < 1) throw Error(ErrorCode::QuantumNumberOutOfRange, "n must be at least 1");
  if (family == RydbergFamily::Circular) {
    const double leading = n / Z;
    return detail::estimate(leading, leading * (1.0 + 3.0 / (4.0 * n)), Regime::Rydberg, "D = 3, l = n-1");
  }
  const double scale = 4.0 * n / (std::numbers::pi * Z);
  const double head = std::log(4.0 * n) + euler_gamma - 0.5;
  return detail::estimate(scale * head, scale * (head - 1.0 / (2.0 * n) - 1.0 / (12.0 * n * n)),
                          Regime::Rydberg, "D = 3, l = 0");
}

/// Large-D estimates.
///   Position: (D^2/4Z)^alpha (1 + (alpha+1)(alpha+4l-2)/(2D)) (1 + (alpha+1)(alpha+2)(n-l-1)/(D+2l-1)).
///   Momentum: (2Z/D)^alpha (1 + alpha(alpha-2)(2n-2l-1)/(2D)).
/// For circular states these reduce to the factors (1 + (alpha+1)(4n+alpha-6)/(2D))
/// and (1 + alpha(alpha-2)/(2D)).
inline AsymptoticEstimate highD(double alpha, const HydrogenicState& state, Space space) {
  const double D = state.D(), n = state.n(), l = state.l(), Z = state.Z();
  const double lower = -D - 2.0 * l;
  if (space == Space::Position) {
    if (!(alpha > lower)) {
      throw Error(ErrorCode::OrderOutOfRegime, "high-D <r^alpha> needs alpha > -D-2l");
    }
    const double leading = std::pow(D * D / (4.0 * Z), alpha);
    const double first = 1.0 + (alpha + 1.0) * (alpha + 4.0 * l - 2.0) / (2.0 * D);
    const double second = 1.0 + (alpha + 1.0) * (alpha + 2.0) * (n - l - 1.0) / (D + 2.0 * l - 1.0);
    return detail::estimate(leading, leading * first * second, Regime::HighD,
                            "alpha > -D-2l = " + detail::fmt(lower));
  }
  const double upper = D + 2.0 * l + 2.0;
  if (!(alpha > lower && alpha < upper)) {
    throw Error(ErrorCode::OrderOutOfRegime, "high-D <p^alpha> needs -D-2l < alpha < D+2l+2");
  }
  const double leading = std::pow(2.0 * Z / D, alpha);
  const double factor = 1.0 + alpha * (alpha - 2.0) * (2.0 * n - 2.0 * l - 1.0) / (2.0 * D);
  return detail::estimate(leading, leading * factor, Regime::HighD,
                          "-D-2l < alpha < D+2l+2 = " + detail::fmt(upper));
}

}  // namespace hydromoments
