#pragma once

#include <cmath>
#include <numbers>

#include "hydromoments/specfun/gamma.hpp"

namespace hydromoments::oracle {

/// Three-term recurrence coefficients of a family orthonormal with respect to a
/// probability measure:  sqrt(b_{j+1}) p_{j+1} = (x - a_j) p_j - sqrt(b_j) p_{j-1}.
struct Recurrence {
  virtual ~Recurrence() = default;
  virtual double a(long j) const = 0;
  /// b_j for j >= 1.
  virtual double b(long j) const = 0;
};

/// Generalized Laguerre weight x^lambda e^-x on [0, inf).
struct LaguerreRecurrence final : Recurrence {
  explicit LaguerreRecurrence(double lambda) : lambda(lambda) {}
  double a(long j) const override { return 2.0 * j + lambda + 1.0; }
  double b(long j) const override { return j * (j + lambda); }
  double lambda;
};

/// Jacobi weight (1-t)^alpha (1+t)^beta on [-1, 1].
struct JacobiRecurrence final : Recurrence {
  JacobiRecurrence(double alpha, double beta) : alpha(alpha), beta(beta) {}

  double a(long j) const override {
    const double s = alpha + beta;
    if (j == 0) return (beta - alpha) / (s + 2.0);
    const double t = 2.0 * j + s;
    return (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }

  double b(long j) const override {
    const double s = alpha + beta;
    if (j == 1) return 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    const double t = 2.0 * j + s;
    return 4.0 * j * (j + alpha) * (j + beta) * (j + s) / (t * t * (t + 1.0) * (t - 1.0));
  }

  double alpha, beta;
};

/// Value of the degree-k member orthonormal w.r.t. the normalized measure.
inline double orthonormal_value(const Recurrence& rec, long k, double x) {
  double prev = 0.0, cur = 1.0;
  for (long j = 0; j < k; ++j) {
    const double next = ((x - rec.a(j)) * cur - (j > 0 ? std::sqrt(rec.b(j)) * prev : 0.0)) /
                        std::sqrt(rec.b(j + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

inline void require_laguerre_params(long k, double lambda) {
  if (k < 0 || !(lambda > -1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "Laguerre polynomials need k >= 0 and lambda > -1");
  }
}

inline void require_gegenbauer_params(long k, double nu) {
  if (k < 0 || !(nu > -0.5)) {
    throw Error(ErrorCode::ParameterOutOfRange, "Gegenbauer polynomials need k >= 0 and nu > -1/2");
  }
}

}  // namespace detail

/// Standard Laguerre polynomial L_k^(lambda)(x).
inline double laguerre(long k, double lambda, double x) {
  detail::require_laguerre_params(k, lambda);
  double prev = 0.0, cur = 1.0;
  for (long j = 0; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + lambda - x) * cur - (j + lambda) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Laguerre polynomial orthonormal w.r.t. x^lambda e^-x:
///   [k! / Gamma(k+lambda+1)]^(1/2) L_k^(lambda)(x),
/// evaluated by the normalized recurrence so that large k cannot overflow.
inline double laguerre_orthonormal(long k, double lambda, double x) {
  detail::require_laguerre_params(k, lambda);
  const double value = orthonormal_value(LaguerreRecurrence(lambda), k, x);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * value * std::exp(-0.5 * log_gamma(lambda + 1.0));
}

/// Standard Gegenbauer polynomial C_k^(nu)(t).
inline double gegenbauer(long k, double nu, double t) {
  detail::require_gegenbauer_params(k, nu);
  double prev = 0.0, cur = 1.0;
  for (long j = 0; j < k; ++j) {
    const double next = (2.0 * (j + nu) * t * cur - (j + 2.0 * nu - 1.0) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Total mass of the Gegenbauer weight (1-t^2)^(nu-1/2):  sqrt(pi) Gamma(nu+1/2) / Gamma(nu+1).
inline double gegenbauer_log_mass(double nu) {
  return 0.5 * std::log(std::numbers::pi) + log_gamma(nu + 0.5) - log_gamma(nu + 1.0);
}

/// Gegenbauer polynomial orthonormal w.r.t. (1-t^2)^(nu-1/2), i.e.
///   [k! (k+nu) Gamma(nu)^2 / (pi 2^(1-2nu) Gamma(2nu+k))]^(1/2) C_k^(nu)(t).
inline double gegenbauer_orthonormal(long k, double nu, double t) {
  detail::require_gegenbauer_params(k, nu);
  const double value = orthonormal_value(JacobiRecurrence(nu - 0.5, nu - 0.5), k, t);
  return value * std::exp(-0.5 * gegenbauer_log_mass(nu));
}

/// A(n,l;D) = (n-l-1)! (n+(D-3)/2) Gamma(l+(D-1)/2)^2 / (2^(2-2l-D) pi Gamma(n+l+D-2)),
/// the square of the factor turning C into its orthonormal version for the
/// momentum wavefunction.
inline ExactValue gegenbauer_normalization(int n, int l, int D) {
  const Rational eta = make_rational(2L * n + D - 3, 2);
  ExactValue value = gamma_exact(Rational(n - l)) * ExactValue(eta) *
                     pow(gamma_exact(make_rational(2L * l + D - 1, 2)), 2);
  value /= pow(ExactValue(2), 2 - 2 * l - D) * ExactValue::pi_power(2) *
           gamma_exact(Rational(n + l + D - 2));
  return value;
}

}  // namespace hydromoments::oracle
