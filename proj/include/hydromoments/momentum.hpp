#pragma once

#include <cmath>
#include <numbers>
#include <type_traits>
#include <vector>

#include "hydromoments/position.hpp"
#include "hydromoments/result.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/specfun/hypergeometric.hpp"

namespace hydromoments {

/// The single-sum decomposition <p^alpha> = (Z/eta)^alpha F_k(nu,alpha) f_k(nu):
///   f_k(nu) = 1/(2nu)_k sum_j (-1)^j C(k,j) (2nu+j)_k d_j,
///   d_j     = nu/(nu+j) (nu+(alpha+1)/2)_j (nu+(3-alpha)/2)_j / ((nu+1/2)_j (nu+3/2)_j).
template <class T>
struct SingleSumParts {
  T f{};
  std::vector<T> d;
  /// Signed summands of f, already divided by (2nu)_k.
  std::vector<T> terms;
};

/// Builds d_j and the summands of f_k by the term-ratio recursion, which works
/// identically in exact and floating arithmetic.
template <class T>
SingleSumParts<T> single_sum_parts(const T& nu, const T& alpha, long k) {
  const T half = T(1) / T(2);
  const T a = nu + (alpha + T(1)) / T(2);
  const T b = nu + (T(3) - alpha) / T(2);
  SingleSumParts<T> parts;
  parts.d.reserve(k + 1);
  parts.terms.reserve(k + 1);
  T d(1);
  T term(1);  // C(k,0) (2nu)_k / (2nu)_k d_0
  parts.d.push_back(d);
  parts.terms.push_back(term);
  for (long j = 1; j <= k; ++j) {
    const T jm1(j - 1);
    const T ratio_d = (nu + jm1) / (nu + T(j)) * (a + jm1) * (b + jm1) /
                      ((nu + jm1 + half) * (nu + jm1 + T(3) * half));
    d *= ratio_d;
    term *= -T(k - j + 1) / T(j) * (T(2) * nu + T(j + k - 1)) / (T(2) * nu + jm1) * ratio_d;
    parts.d.push_back(d);
    parts.terms.push_back(term);
  }
  T f(0);
  for (const T& t : parts.terms) f += t;
  parts.f = f;
  return parts;
}

namespace detail {

inline Rational momentum_shift_a(const Rational& nu, long m) { return nu + make_rational(m + 1, 2); }
inline Rational momentum_shift_b(const Rational& nu, long m) { return nu + make_rational(3 - m, 2); }

/// (Z/eta)^m exactly.
inline ExactValue scale_power(const HydrogenicState& s, long m) {
  return pow(ExactValue(s.Z_exact() / s.eta()), m);
}

/// F_k(nu, m) for integer m.
inline ExactValue big_f_exact(const HydrogenicState& s, long m) {
  const Rational& nu = s.nu();
  const long k = s.k();
  ExactValue F = ExactValue(2 * (k + nu)) * gamma_exact(k + 2 * nu) /
                 (gamma_exact(Rational(k + 1)) * gamma_exact(2 * nu + 1));
  F *= gamma_exact(momentum_shift_a(nu, m)) * gamma_exact(momentum_shift_b(nu, m));
  F /= gamma_exact(nu + make_rational(1, 2)) * gamma_exact(nu + make_rational(3, 2));
  return F;
}

/// log F_k(nu, alpha) for real alpha (F > 0 throughout the domain).
inline double log_big_f(const HydrogenicState& s, double alpha, double* magnitude) {
  const double nu = s.nu_d();
  const double k = s.k();
  const double parts[] = {
      log_gamma(k + 2 * nu), -log_gamma(k + 1), -log_gamma(2 * nu + 1),
      log_gamma(nu + (alpha + 1) / 2), log_gamma(nu + (3 - alpha) / 2),
      -log_gamma(nu + 0.5), -log_gamma(nu + 1.5)};
  double total = std::log(2 * (k + nu));
  double mag = std::abs(total);
  for (double p : parts) {
    total += p;
    mag += std::abs(p);
  }
  if (magnitude) *magnitude = mag;
  return total;
}

inline BoundedValue single_sum_float(const HydrogenicState& s, double alpha) {
  const long k = s.k();
  const auto parts = single_sum_parts<double>(s.nu_d(), alpha, k);
  TrackedSum sum;
  for (long j = 0; j <= k; ++j) sum.add(parts.terms[j], 14.0 * static_cast<double>(j));
  return sum.result();
}

inline double single_sum_rational(const HydrogenicState& s, double alpha) {
  return single_sum_parts<Rational>(s.nu(), rational_from_double(alpha), s.k()).f.get_d();
}

/// Resolves a floating sum against the cancellation tolerance.
template <class Fallback>
BoundedValue checked_sum(BoundedValue sum, Mode mode, const HydrogenicState& s, const char* what,
                         Fallback&& fallback) {
  if (sum.relative_error() <= resummation_tolerance) return sum;
  if (mode == Mode::Float) {
    if (sum.relative_error() <= cancellation_tolerance) return sum;
    throw Error(ErrorCode::CancellationOverflow,
                std::string(what) + " lost to cancellation for " + s.str());
  }
  const double value = fallback();
  return {value, 2.0 * TrackedSum::unit_roundoff * std::abs(value)};
}

}  // namespace detail

enum class MomentumRoute { SingleSum, Hyp5F4 };

/// <p^alpha> for -D-2l < alpha < D+2l+2.
///
/// The default route is the single sum (Z/eta)^alpha F_k f_k; the raw 5F4
/// representation
///   2^(1-2nu) Z^alpha sqrt(pi) / (k! eta^alpha)
///     * (k+nu) Gamma(k+2nu) Gamma(nu+(alpha+1)/2) Gamma(nu+(3-alpha)/2)
///       / (Gamma(nu+1/2)^2 Gamma(nu+1) Gamma(nu+3/2))
///     * 5F4(-k, k+2nu, nu, nu+(alpha+1)/2, nu+(3-alpha)/2;
///           2nu, nu+1/2, nu+1, nu+3/2; 1)
/// is selectable and must agree.
inline MomentResult p_moment(const HydrogenicState& state, double alpha, Mode mode = Mode::Auto,
                             MomentumRoute route = MomentumRoute::SingleSum) {
  require_order(state, alpha, Space::Momentum);
  const long k = state.k();
  const Rational& nu = state.nu();

  if (route == MomentumRoute::SingleSum) {
    if (use_exact(mode, alpha)) {
      const long m = static_cast<long>(alpha);
      const auto parts = single_sum_parts<Rational>(nu, Rational(m), k);
      ExactValue value = detail::scale_power(state, m) * detail::big_f_exact(state, m);
      value *= ExactValue(parts.f);
      return {value, 0.0, Method::SingleSum, Space::Momentum, alpha, state};
    }
    double magnitude = 0.0;
    const double log_pref =
        alpha * std::log(state.Z() / state.eta_d()) + detail::log_big_f(state, alpha, &magnitude);
    const double pref = std::exp(log_pref);
    const BoundedValue f = detail::checked_sum(
        detail::single_sum_float(state, alpha), mode, state, "single sum",
        [&] { return detail::single_sum_rational(state, alpha); });
    const double value = pref * f.value;
    const double error =
        std::abs(value) * detail::prefactor_relative_error(magnitude + std::abs(log_pref)) +
        pref * f.error;
    return {value, error, Method::SingleSum, Space::Momentum, alpha, state};
  }

  // 5F4 route.
  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    const Rational a = detail::momentum_shift_a(nu, m);
    const Rational b = detail::momentum_shift_b(nu, m);
    const Rational half(1, 2);
    HypSumSpec<Rational> series{{Rational(-k), k + 2 * nu, nu, a, b},
                                {2 * nu, nu + half, nu + 1, nu + 3 * half},
                                k + 1};
    const Rational sum = hyp_sum(series);
    // 2nu = 2l + D - 1 is an integer.
    const long two_nu = to_long(2 * nu);
    ExactValue value = pow(ExactValue(2), 1 - two_nu) * ExactValue::pi_power(1) *
                       detail::scale_power(state, m) / gamma_exact(Rational(k + 1));
    value *= ExactValue(k + nu) * gamma_exact(k + 2 * nu) * gamma_exact(a) * gamma_exact(b);
    value /= pow(gamma_exact(nu + half), 2) * gamma_exact(nu + 1) * gamma_exact(nu + 3 * half);
    value *= ExactValue(sum);
    return {value, 0.0, Method::Hyp5F4, Space::Momentum, alpha, state};
  }

  const double nud = state.nu_d();
  const double kd = static_cast<double>(k);
  const double a = nud + (alpha + 1) / 2;
  const double b = nud + (3 - alpha) / 2;
  const double lg[] = {log_gamma(kd + 2 * nud), log_gamma(a), log_gamma(b),
                       log_gamma(kd + 1), 2 * log_gamma(nud + 0.5), log_gamma(nud + 1),
                       log_gamma(nud + 1.5)};
  const double log_pref = (1 - 2 * nud) * std::numbers::ln2 + 0.5 * std::log(std::numbers::pi) +
                          alpha * std::log(state.Z() / state.eta_d()) + std::log(kd + nud) +
                          lg[0] + lg[1] + lg[2] - lg[3] - lg[4] - lg[5] - lg[6];
  double magnitude = std::abs(log_pref);
  for (double x : lg) magnitude += std::abs(x);
  const double pref = std::exp(log_pref);
  HypSumSpec<double> series{{-kd, kd + 2 * nud, nud, a, b},
                            {2 * nud, nud + 0.5, nud + 1, nud + 1.5},
                            k + 1};
  const BoundedValue sum =
      detail::checked_sum(hyp_sum(series), mode, state, "5F4 sum", [&] {
        const Rational ar = rational_from_double(alpha);
        const Rational half(1, 2);
        HypSumSpec<Rational> exact{{Rational(-k), k + 2 * nu, nu, nu + (ar + 1) / 2, nu + (3 - ar) / 2},
                                   {2 * nu, nu + half, nu + 1, nu + 3 * half},
                                   k + 1};
        return detail::terminating_sum(exact).get_d();
      });
  const double value = pref * sum.value;
  const double error =
      std::abs(value) * detail::prefactor_relative_error(magnitude) + pref * sum.error;
  return {value, error, Method::Hyp5F4, Space::Momentum, alpha, state};
}

namespace detail {

/// Normalized double-sum kernel
///   S = sum_{i,j} u_i u_j w_{i+j},
///   u_i = (-k)_i (N)_i / ((l+D/2)_i i!),   w_s = (c)_s / (2l+D+1)_s,
/// with N = n+l+D-2 and c = l+(D+alpha)/2.
template <class T>
T double_sum_kernel(long k, const T& N, const T& half_D_plus_l, const T& c, const T& bottom,
                    TrackedSum* tracker = nullptr) {
  std::vector<T> u(k + 1), w(2 * k + 1);
  u[0] = T(1);
  for (long i = 1; i <= k; ++i) {
    u[i] = u[i - 1] * T(i - 1 - k) * (N + T(i - 1)) / ((half_D_plus_l + T(i - 1)) * T(i));
  }
  w[0] = T(1);
  for (long s = 1; s <= 2 * k; ++s) w[s] = w[s - 1] * (c + T(s - 1)) / (bottom + T(s - 1));
  T sum(0);
  for (long i = 0; i <= k; ++i) {
    for (long j = 0; j <= k; ++j) {
      const T term = u[i] * u[j] * w[i + j];
      if (tracker) {
        if constexpr (std::is_same_v<T, double>) tracker->add(term, 6.0 * (i + j) + 2.0);
      }
      sum += term;
    }
  }
  return sum;
}

}  // namespace detail

/// Double summation, kept as an independent cross-check:
///   4 eta (Z/eta)^alpha Gamma(l+(D-alpha)/2+1) / (Gamma(n+l+D-2) Gamma(n-l))
///     * sum_{i,j=0}^{k} Pi_ij Gamma(l+(D+alpha)/2+i+j),
///   Pi_ij = (-k)_i (-k)_j Gamma(n+l+D-2+i) Gamma(n+l+D-2+j)
///           / (Gamma(l+D/2+i) Gamma(l+D/2+j) Gamma(2l+D+1+i+j) i! j!).
/// The gamma functions are pulled out of the sum, leaving rational term ratios.
inline MomentResult p_moment_double_sum(const HydrogenicState& state, double alpha,
                                        Mode mode = Mode::Auto) {
  require_order(state, alpha, Space::Momentum);
  const long k = state.k();
  const int D = state.D(), n = state.n(), l = state.l();
  const long N = n + l + D - 2;
  const Rational half_D_plus_l = l + make_rational(D, 2);
  const Rational bottom(2 * l + D + 1);

  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    const Rational c = l + make_rational(D + m, 2);
    const Rational sum = detail::double_sum_kernel<Rational>(k, Rational(N), half_D_plus_l, c, bottom);
    ExactValue value = ExactValue(4 * state.eta()) * detail::scale_power(state, m) *
                       gamma_exact(l + make_rational(D - m, 2) + 1) * gamma_exact(c) *
                       gamma_exact(Rational(N));
    value /= gamma_exact(Rational(n - l)) * pow(gamma_exact(half_D_plus_l), 2) *
             gamma_exact(bottom);
    value *= ExactValue(sum);
    return {value, 0.0, Method::DoubleSum, Space::Momentum, alpha, state};
  }

  const double Dd = D;
  const double c = l + (Dd + alpha) / 2;
  const double lg[] = {log_gamma(l + (Dd - alpha) / 2 + 1), log_gamma(c),
                       log_gamma(static_cast<double>(N)), log_gamma(static_cast<double>(n - l)),
                       2 * log_gamma(half_D_plus_l.get_d()), log_gamma(bottom.get_d())};
  const double log_pref = std::log(4 * state.eta_d()) + alpha * std::log(state.Z() / state.eta_d()) +
                          lg[0] + lg[1] + lg[2] - lg[3] - lg[4] - lg[5];
  double magnitude = std::abs(log_pref);
  for (double x : lg) magnitude += std::abs(x);
  const double pref = std::exp(log_pref);

  TrackedSum tracker;
  detail::double_sum_kernel<double>(k, static_cast<double>(N), half_D_plus_l.get_d(), c,
                                    bottom.get_d(), &tracker);
  const BoundedValue sum = detail::checked_sum(tracker.result(), mode, state, "double sum", [&] {
    const Rational cr = l + (make_rational(D, 1) + rational_from_double(alpha)) / 2;
    return detail::double_sum_kernel<Rational>(k, Rational(N), half_D_plus_l, cr, bottom).get_d();
  });
  const double value = pref * sum.value;
  const double error =
      std::abs(value) * detail::prefactor_relative_error(magnitude) + pref * sum.error;
  return {value, error, Method::DoubleSum, Space::Momentum, alpha, state};
}

/// Closed forms for even orders alpha in {0, 2, -2, 4, 6}.
inline MomentResult p_moment_even_closed(const HydrogenicState& state, int alpha) {
  require_order(state, alpha, Space::Momentum);
  const Rational ratio = state.Z_exact() / state.eta();  // Z / eta
  const Rational two_L_plus_1 = 2 * state.L() + 1;
  const Rational k(state.k());
  const Rational& nu = state.nu();
  auto nonzero = [&](const Rational& d) {
    if (d == 0) {
      throw Error(ErrorCode::SingularDenominator,
                  "closed form for <p^" + std::to_string(alpha) + "> is singular for " + state.str());
    }
    return d;
  };
  Rational value;
  switch (alpha) {
    case 0:
      value = 1;
      break;
    case 2:
      value = ratio * ratio;
      break;
    case -2:
      value = (8 * state.eta() - 3 * two_L_plus_1) / nonzero(two_L_plus_1) / (ratio * ratio);
      break;
    case 4:
      value = pow(ratio, 4) * (8 * state.eta() - 3 * two_L_plus_1) / nonzero(two_L_plus_1);
      break;
    case 6: {
      const Rational num = (4 * k + 2 * nu + 1) *
                           (16 * k * k + 40 * nu * k - 4 * k + 4 * nu * nu + 16 * nu + 15);
      value = pow(ratio, 6) * num /
              nonzero((two_L_plus_1 + 2) * two_L_plus_1 * (two_L_plus_1 - 2));
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedArgument,
                  "no even-order closed form for <p^" + std::to_string(alpha) + ">");
  }
  return {ExactValue(value), 0.0, Method::ClosedForm, Space::Momentum,
          static_cast<double>(alpha), state};
}

/// <p^(2-alpha)> from <p^alpha> via (eta/Z)^(2-alpha) <p^(2-alpha)> = (eta/Z)^alpha <p^alpha>.
inline MomentResult reflect(const HydrogenicState& state, double alpha, Mode mode = Mode::Auto) {
  require_order(state, alpha, Space::Momentum);
  require_order(state, 2.0 - alpha, Space::Momentum);
  const MomentResult source = p_moment(state, alpha, mode);
  if (source.is_exact()) {
    const long m = static_cast<long>(alpha);
    ExactValue value = pow(ExactValue(state.eta() / state.Z_exact()), 2 * m - 2) * source.exact();
    return {value, 0.0, Method::Reflection, Space::Momentum, 2.0 - alpha, state};
  }
  const double factor = std::pow(state.eta_d() / state.Z(), 2 * alpha - 2);
  const double value = factor * source.decimal();
  const double error = factor * source.error_estimate +
                       std::abs(value) * detail::prefactor_relative_error(std::abs(2 * alpha - 2));
  return {value, error, Method::Reflection, Space::Momentum, 2.0 - alpha, state};
}

/// <p^3> = (Z/eta)^4 <p^-1>.
inline MomentResult p_cubed_from_inverse(const HydrogenicState& state) {
  return reflect(state, -1.0, Mode::Exact);
}

/// Circular states (l = n-1, k = 0):
///   (Z/eta)^alpha Gamma(eta+(alpha+1)/2) Gamma(eta+(3-alpha)/2) / (Gamma(eta+1/2) Gamma(eta+3/2)),
/// valid for alpha in (-D-2n+2, D+2n).
inline MomentResult p_moment_circular(const HydrogenicState& state, double alpha,
                                      Mode mode = Mode::Auto) {
  if (!state.is_circular()) {
    throw Error(ErrorCode::NotCircular, "circular formula needs l = n-1, got " + state.str());
  }
  require_order(state, alpha, Space::Momentum);
  const Rational& eta = state.eta();
  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    ExactValue value = detail::scale_power(state, m) *
                       gamma_exact(eta + make_rational(m + 1, 2)) * gamma_exact(eta + make_rational(3 - m, 2)) /
                       (gamma_exact(eta + make_rational(1, 2)) * gamma_exact(eta + make_rational(3, 2)));
    return {value, 0.0, Method::ClosedForm, Space::Momentum, alpha, state};
  }
  const double e = state.eta_d();
  const double lg[] = {log_gamma(e + (alpha + 1) / 2), log_gamma(e + (3 - alpha) / 2),
                       log_gamma(e + 0.5), log_gamma(e + 1.5)};
  const double log_value = alpha * std::log(state.Z() / e) + lg[0] + lg[1] - lg[2] - lg[3];
  double magnitude = std::abs(log_value);
  for (double x : lg) magnitude += std::abs(x);
  const double value = std::exp(log_value);
  return {value, value * detail::prefactor_relative_error(magnitude), Method::ClosedForm,
          Space::Momentum, alpha, state};
}

/// Ground state (n=1, l=0):
///   (2Z/(D-1))^alpha 2 Gamma((D-alpha)/2+1) Gamma((D+alpha)/2) / (D Gamma(D/2)^2),  -D < alpha < D+2.
inline MomentResult p_moment_ground(int D, double Z, double alpha, Mode mode = Mode::Auto) {
  const HydrogenicState state = make_state(D, 1, 0, Z);
  require_order(state, alpha, Space::Momentum);
  if (use_exact(mode, alpha)) {
    const long m = static_cast<long>(alpha);
    ExactValue value = pow(ExactValue(2 * state.Z_exact() / (D - 1)), m) * ExactValue(2) *
                       gamma_exact(make_rational(D - m, 2) + 1) * gamma_exact(make_rational(D + m, 2));
    value /= ExactValue(D) * pow(gamma_exact(make_rational(D, 2)), 2);
    return {value, 0.0, Method::ClosedForm, Space::Momentum, alpha, state};
  }
  const double lg[] = {log_gamma((D - alpha) / 2 + 1), log_gamma((D + alpha) / 2),
                       2 * log_gamma(D / 2.0)};
  const double log_value = alpha * std::log(2 * Z / (D - 1)) + std::log(2.0 / D) + lg[0] + lg[1] - lg[2];
  double magnitude = std::abs(log_value);
  for (double x : lg) magnitude += std::abs(x);
  const double value = std::exp(log_value);
  return {value, value * detail::prefactor_relative_error(magnitude), Method::ClosedForm,
          Space::Momentum, alpha, state};
}

/// <p> for 3D nS states: (2Z/(pi n)) 4n^2/(4n^2-1).
inline MomentResult mean_momentum_3d_ns(int n, double Z) {
  const HydrogenicState state = make_state(3, n, 0, Z);
  const Rational nn(static_cast<long>(n) * n);
  const Rational coeff = 2 * state.Z_exact() / n * 4 * nn / (4 * nn - 1);
  return {ExactValue(coeff, -2), 0.0, Method::ClosedForm, Space::Momentum, 1.0, state};
}

/// Mean momentum <p>. Circular and 3D nS states use their dedicated closed
/// forms; everything else the alpha = 1 single sum.
inline MomentResult mean_momentum(const HydrogenicState& state) {
  if (state.is_circular()) return p_moment_circular(state, 1.0, Mode::Exact);
  if (state.D() == 3 && state.l() == 0) return mean_momentum_3d_ns(state.n(), state.Z());
  return p_moment(state, 1.0, Mode::Exact);
}

/// <p^-1> for 3D nS states through the half-integer digamma:
///   (4n/(Z pi)) [psi(n+1/2) - 2n^2/(4n^2-1) + gamma_E + 2 ln 2];
/// the transcendental constants cancel, leaving rational / (Z pi).
inline MomentResult inverse_momentum_3d_ns(int n, double Z) {
  const HydrogenicState state = make_state(3, n, 0, Z);
  const Rational nn(static_cast<long>(n) * n);
  const Rational bracket = digamma_half_exact(n).rational_part - 2 * nn / (4 * nn - 1);
  const Rational coeff = Rational(4 * n) / state.Z_exact() * bracket;
  return {ExactValue(coeff, -2), 0.0, Method::ClosedForm, Space::Momentum, -1.0, state};
}

/// Average inverse momentum <p^-1> (Compton-profile peak height in the
/// impulse approximation).
inline MomentResult inverse_momentum(const HydrogenicState& state) {
  if (state.is_circular()) return p_moment_circular(state, -1.0, Mode::Exact);
  if (state.D() == 3 && state.l() == 0) return inverse_momentum_3d_ns(state.n(), state.Z());
  return p_moment(state, -1.0, Mode::Exact);
}

// Named physical moments. Proportionality constants are deliberately left out.
inline MomentResult dirac_slater_exchange_moment(const HydrogenicState& s) { return mean_momentum(s); }
inline MomentResult kinetic_energy_moment(const HydrogenicState& s) { return p_moment(s, 2.0); }
inline MomentResult interelectronic_repulsion_moment(const HydrogenicState& s) { return p_moment(s, 3.0); }
inline MomentResult breit_pauli_moment(const HydrogenicState& s) { return p_moment(s, 4.0); }
inline MomentResult compton_peak_moment(const HydrogenicState& s) { return inverse_momentum(s); }

}  // namespace hydromoments
