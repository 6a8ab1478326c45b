#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "hydromoments/result.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"

namespace hydromoments {

namespace detail {

/// Relative rounding error of a floating prefactor assembled from a handful of
/// pow/exp/lgamma calls whose arguments have magnitude up to `scale`.
inline double prefactor_relative_error(double scale) {
  return 16.0 * TrackedSum::unit_roundoff * (1.0 + scale);
}

template <class T>
HypSumSpec<T> position_series(const T& k, const T& alpha, const T& two_L_plus_2) {
  return {{-k, -alpha - T(1), alpha + T(2)}, {two_L_plus_2, T(1)}, 0};
}

}  // namespace detail

/// <r^alpha> from the terminating 3F2 representation
///   eta^(alpha-1) / (2^(alpha+1) Z^alpha) * Gamma(2L+alpha+3)/Gamma(2L+2)
///     * 3F2(-k, -alpha-1, alpha+2; 2L+2, 1; 1).
/// The series always has k+1 terms; for non-integer alpha it still terminates
/// through its first parameter.
inline MomentResult r_moment(const HydrogenicState& state, double alpha, Mode mode = Mode::Auto) {
  require_order(state, alpha, Space::Position);
  const long k = state.k();
  const long two_L_plus_2 = 2L * state.l() + state.D() - 1;

  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    auto series = detail::position_series<Rational>(Rational(k), Rational(m), Rational(two_L_plus_2));
    series.terms = k + 1;
    const Rational sum = hyp_sum(series);
    ExactValue value = pow(ExactValue(state.eta()), m - 1) /
                       (pow(ExactValue(2), m + 1) * pow(ExactValue(state.Z_exact()), m));
    value *= gamma_exact(Rational(two_L_plus_2 + 1 + m)) / gamma_exact(Rational(two_L_plus_2));
    value *= ExactValue(sum);
    return {value, 0.0, Method::Hyp3F2, Space::Position, alpha, state};
  }

  const double eta = state.eta_d();
  const double Z = state.Z();
  const double lg_hi = log_gamma(two_L_plus_2 + 1 + alpha);
  const double lg_lo = log_gamma(static_cast<double>(two_L_plus_2));
  const double log_pref = (alpha - 1.0) * std::log(eta) - (alpha + 1.0) * std::numbers::ln2 -
                          alpha * std::log(Z) + lg_hi - lg_lo;
  const double pref = std::exp(log_pref);
  const double pref_rel = detail::prefactor_relative_error(
      std::abs(lg_hi) + std::abs(lg_lo) + std::abs(log_pref) + std::abs(alpha));

  auto series = detail::position_series<double>(static_cast<double>(k), alpha,
                                                static_cast<double>(two_L_plus_2));
  series.terms = k + 1;
  BoundedValue sum = hyp_sum(series);
  const bool flagged = sum.relative_error() > (mode == Mode::Float ? cancellation_tolerance : resummation_tolerance);
  if (flagged) {
    if (mode == Mode::Float) {
      throw Error(ErrorCode::CancellationOverflow,
                  "3F2 sum lost to cancellation for " + state.str());
    }
    auto exact_series = detail::position_series<Rational>(
        Rational(k), rational_from_double(alpha), Rational(two_L_plus_2));
    exact_series.terms = k + 1;
    sum = {detail::terminating_sum(exact_series).get_d(), 0.0};
    sum.error = 2.0 * TrackedSum::unit_roundoff * std::abs(sum.value);
  }
  const double value = pref * sum.value;
  const double error = std::abs(value) * pref_rel + std::abs(pref) * sum.error;
  return {value, error, Method::Hyp3F2, Space::Position, alpha, state};
}

/// Orders with a tabulated closed form (besides the trivial alpha = 0).
inline constexpr std::array<int, 7> closed_position_orders{1, 2, -1, -2, -3, -4, -6};

/// Tabulated closed forms for <r^alpha>, alpha in {0, 1, 2, -1, -2, -3, -4, -6}.
inline MomentResult r_moment_closed(const HydrogenicState& state, int alpha) {
  require_order(state, alpha, Space::Position);
  const Rational eta = state.eta();
  const Rational L = state.L();
  const Rational Z = state.Z_exact();
  const Rational half(1, 2);
  auto nonzero = [&](const Rational& d) {
    if (d == 0) {
      throw Error(ErrorCode::SingularDenominator,
                  "closed form for <r^" + std::to_string(alpha) + "> is singular at L = " +
                      to_string(L));
    }
    return d;
  };

  Rational value;
  switch (alpha) {
    case 0:
      value = 1;
      break;
    case 1:
      value = (3 * eta * eta - L * (L + 1)) / (2 * Z);
      break;
    case 2:
      value = eta * eta / (2 * Z * Z) * (5 * eta * eta + 1 - 3 * L * (L + 1));
      break;
    case -1:
      value = Z / (eta * eta);
      break;
    case -2:
      value = Z * Z / (pow(eta, 3) * nonzero(L + half));
      break;
    case -3:
      value = pow(Z, 3) / (pow(eta, 3) * nonzero(L * (L + half) * (L + 1)));
      break;
    case -4:
      value = pow(Z, 4) / (2 * pow(eta, 5)) * (3 * eta * eta - L * (L + 1)) /
              nonzero((L - half) * L * (L + half) * (L + 1) * (L + 3 * half));
      break;
    case -6: {
      const Rational num = 35 * eta * eta * (eta * eta - 1) - 30 * eta * eta * (L + 2) * (L - 1) +
                           3 * (L + 2) * (L + 1) * L * (L - 1);
      const Rational den = (L - 3 * half) * (L - 1) * (L - half) * L * (L + half) * (L + 1) *
                           (L + 3 * half) * (L + 2) * (L + 5 * half);
      value = pow(Z, 6) / (8 * pow(eta, 7)) * num / nonzero(den);
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedArgument,
                  "no closed form for <r^" + std::to_string(alpha) + ">");
  }
  return {ExactValue(value), 0.0, Method::ClosedForm, Space::Position,
          static_cast<double>(alpha), state};
}

inline bool has_closed_position_form(int alpha) {
  if (alpha == 0) return true;
  for (int a : closed_position_orders) {
    if (a == alpha) return true;
  }
  return false;
}

/// Ground state (n=1, l=0):  ((D-1)/(4Z))^alpha Gamma(D+alpha)/Gamma(D),  alpha > -D.
inline MomentResult r_moment_ground(int D, double Z, double alpha, Mode mode = Mode::Auto) {
  const HydrogenicState state = make_state(D, 1, 0, Z);
  require_order(state, alpha, Space::Position);
  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    ExactValue value = pow(ExactValue(Rational(D - 1) / (4 * state.Z_exact())), m);
    value *= gamma_exact(Rational(D + m)) / gamma_exact(Rational(D));
    return {value, 0.0, Method::ClosedForm, Space::Position, alpha, state};
  }
  const double lg_hi = log_gamma(D + alpha);
  const double lg_lo = log_gamma(static_cast<double>(D));
  const double log_value = alpha * std::log((D - 1) / (4.0 * Z)) + lg_hi - lg_lo;
  const double value = std::exp(log_value);
  const double error = std::abs(value) * detail::prefactor_relative_error(
                                             std::abs(lg_hi) + std::abs(lg_lo) + std::abs(log_value));
  return {value, error, Method::ClosedForm, Space::Position, alpha, state};
}

/// Default position route: tabulated closed form when one applies, else the
/// 3F2 representation.
inline MomentResult position_moment(const HydrogenicState& state, double alpha,
                                    Mode mode = Mode::Auto) {
  if (mode != Mode::Float && is_integer_order(alpha) &&
      has_closed_position_form(static_cast<int>(alpha))) {
    require_order(state, alpha, Space::Position);
    try {
      return r_moment_closed(state, static_cast<int>(alpha));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularDenominator) throw;
    }
  }
  return r_moment(state, alpha, mode);
}

}  // namespace hydromoments
