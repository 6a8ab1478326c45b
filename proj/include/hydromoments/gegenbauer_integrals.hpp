#pragma once

#include <cmath>
#include <vector>

#include "hydromoments/oracle/quadrature.hpp"

namespace hydromoments {

/// The Gegenbauer integrals behind <p> and <p^-1>:
///   I = int_{-1}^{1} [C_k^(nu)(t)]^2 (1-t^2)^nu dt,
///   J = int_{-1}^{1} [C_k^(nu)(t)]^2 (1-t^2)^(nu-1) (1+t)^2 dt,
/// with <p> = K1 I and <p^-1> = K2 J, where
///   K1 = Z 2^(2L+2) Gamma(L+1)^2 k! / (2 pi (eta+L)!),   K2 = (eta^2 / Z^2) K1.
struct GegenbauerIntegrals {
  double I = 0.0;
  double J = 0.0;
  double I_error = 0.0;
  double J_error = 0.0;
  /// Exact values, from the monomial expansion of C_k^2 and Beta integrals.
  ExactValue I_exact;
  ExactValue J_exact;
  ExactValue K1;
  ExactValue K2;
};

namespace detail {

/// Coefficients of C_k^(nu)(t) in powers of t.
inline std::vector<Rational> gegenbauer_coefficients(long k, const Rational& nu) {
  std::vector<Rational> c(k + 1, Rational(0));
  for (long m = 0; 2 * m <= k; ++m) {
    const long power = k - 2 * m;
    Rational term = pochhammer(nu, k - m) / (gamma_exact(Rational(m + 1)).coeff() *
                                             gamma_exact(Rational(power + 1)).coeff());
    term *= pow(Rational(2), power);
    if (m % 2 == 1) term = -term;
    c[power] = term;
  }
  return c;
}

/// int_{-1}^{1} t^j (1-t^2)^mu dt for even j: Gamma((j+1)/2) Gamma(mu+1) / Gamma((j+1)/2 + mu + 1).
inline ExactValue even_power_moment(long j, const Rational& mu) {
  const Rational half_j = make_rational(j + 1, 2);
  return gamma_exact(half_j) * gamma_exact(mu + 1) / gamma_exact(half_j + mu + 1);
}

/// int C_k^2 q(t) (1-t^2)^mu dt for an even polynomial weight factor q given by coefficients.
inline ExactValue squared_gegenbauer_integral(long k, const Rational& nu, const Rational& mu,
                                              const std::vector<Rational>& extra) {
  const auto c = gegenbauer_coefficients(k, nu);
  std::vector<Rational> square(2 * k + extra.size(), Rational(0));
  for (long i = 0; i <= k; ++i) {
    for (long j = 0; j <= k; ++j) {
      for (size_t e = 0; e < extra.size(); ++e) square[i + j + e] += c[i] * c[j] * extra[e];
    }
  }
  ExactValue total;
  for (size_t j = 0; j < square.size(); j += 2) {
    if (square[j] != 0) total += ExactValue(square[j]) * even_power_moment(static_cast<long>(j), mu);
  }
  return total;
}

inline BoundedValue jacobi_gegenbauer_integral(long k, double nu, double a, double b) {
  const auto rule = oracle::RuleCache::instance().jacobi(a, b, k + 2);
  const double log_mass = (a + b + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) +
                          log_gamma(b + 1.0) - log_gamma(a + b + 2.0);
  CompensatedSum sum;
  double magnitude = 0.0;
  for (size_t i = 0; i < rule->nodes.size(); ++i) {
    const double c = oracle::gegenbauer(k, nu, rule->nodes[i]);
    sum.add(rule->weights[i] * c * c);
    magnitude += rule->weights[i] * c * c;
  }
  const double value = std::exp(log_mass) * sum.result();
  const double error = std::exp(log_mass) * magnitude * 64.0 * TrackedSum::unit_roundoff *
                       (4.0 * k + 8.0 + std::abs(log_mass));
  return {value, error};
}

}  // namespace detail

inline GegenbauerIntegrals gegenbauer_integrals(const HydrogenicState& state) {
  const long k = state.k();
  const Rational& nu = state.nu();
  const double nud = state.nu_d();

  GegenbauerIntegrals out;
  out.I_exact = detail::squared_gegenbauer_integral(k, nu, nu, {Rational(1)});
  out.J_exact = detail::squared_gegenbauer_integral(k, nu, nu - 1, {Rational(1), Rational(0), Rational(1)});

  const BoundedValue I = detail::jacobi_gegenbauer_integral(k, nud, nud, nud);
  const BoundedValue J = detail::jacobi_gegenbauer_integral(k, nud, nud - 1.0, nud + 1.0);
  if (!std::isfinite(I.value) || !std::isfinite(J.value)) {
    throw Error(ErrorCode::QuadratureFailure, "Gegenbauer integrals overflowed for " + state.str());
  }
  out.I = I.value;
  out.I_error = I.error;
  out.J = J.value;
  out.J_error = J.error;

  const Rational Z = state.Z_exact();
  const long two_L_plus_2 = 2L * state.l() + state.D() - 1;
  const long eta_plus_L = state.n() + state.l() + state.D() - 3;
  out.K1 = ExactValue(Z) * pow(ExactValue(2), two_L_plus_2) * pow(gamma_exact(state.L() + 1), 2) *
           gamma_exact(Rational(k + 1)) /
           (ExactValue(2) * ExactValue::pi_power(2) * gamma_exact(Rational(eta_plus_L + 1)));
  out.K2 = out.K1 * ExactValue(state.eta() * state.eta() / (Z * Z));
  return out;
}

}  // namespace hydromoments
