#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hydromoments/oracle/gauss_rules.hpp"
#include "hydromoments/result.hpp"
#include "hydromoments/specfun/summation.hpp"

namespace hydromoments::oracle {

/// Radial position and momentum wavefunctions of a state.
///
///   R(r) = K (2Zr/eta)^l e^(-Zr/eta) L_k^(2l+D-2)(2Zr/eta),
///   K^2  = (2Z/eta)^D k! / (2 eta (eta+L)!),
///   M(p) = Z^(-D/2) K' (eta p/Z)^l / (1 + (eta p/Z)^2)^(L+2) C_k^(L+1)(y),
///   y    = (1 - (eta p/Z)^2) / (1 + (eta p/Z)^2),
///   K'^2 = 2^(4L+6) k! Gamma(L+1)^2 eta^(D+1) / (2 pi (eta+L)!).
/// The Z^(-D/2) in M restores the momentum scaling that K' alone leaves out.
class RadialFunctions {
 public:
  explicit RadialFunctions(const HydrogenicState& state) : state_(state) {
    const Rational eta = state.eta();
    const long k = state.k();
    const long eta_plus_L = state.n() + state.l() + state.D() - 3;
    pos_sq_ = pow(ExactValue(2 * state.Z_exact() / eta), state.D()) *
              gamma_exact(Rational(k + 1)) /
              (ExactValue(2 * eta) * gamma_exact(Rational(eta_plus_L + 1)));
    mom_sq_ = pow(ExactValue(2), 4L * state.l() + 2L * state.D()) * gamma_exact(Rational(k + 1)) *
              pow(gamma_exact(state.L() + 1), 2) * pow(ExactValue(eta), state.D() + 1) /
              (ExactValue(2) * ExactValue::pi_power(2) * gamma_exact(Rational(eta_plus_L + 1)));
    K_ = std::sqrt(pos_sq_.to_double());
    Kp_ = std::sqrt(mom_sq_.to_double());
  }

  const HydrogenicState& state() const { return state_; }

  /// K_{n,l}^2 and K'_{n,l}^2, exactly.
  const ExactValue& normalization_pos_squared() const { return pos_sq_; }
  const ExactValue& normalization_mom_squared() const { return mom_sq_; }
  double normalization_pos() const { return K_; }
  double normalization_mom() const { return Kp_; }

  double R(double r) const {
    const double t = 2.0 * state_.Z() * r / state_.eta_d();
    return K_ * std::pow(t, state_.l()) * std::exp(-0.5 * t) *
           laguerre(state_.k(), 2.0 * state_.l() + state_.D() - 2, t);
  }

  /// R(eta t / 2Z)^2 t^m, evaluated in log space so that large t underflows to
  /// zero instead of producing inf * 0.
  double R_squared_times_power(double t, double m) const {
    if (t <= 0.0) return 0.0;
    const double poly = laguerre(state_.k(), 2.0 * state_.l() + state_.D() - 2, t);
    if (poly == 0.0) return 0.0;
    const double log_value = std::log(pos_sq_.to_double()) + (2.0 * state_.l() + m) * std::log(t) - t +
                             2.0 * std::log(std::abs(poly));
    return std::isfinite(log_value) ? std::exp(log_value) : 0.0;
  }

  double M(double p) const {
    const double u = state_.eta_d() * p / state_.Z();
    const double u2 = u * u;
    const double y = (1.0 - u2) / (1.0 + u2);
    return std::pow(state_.Z(), -0.5 * state_.D()) * Kp_ * std::pow(u, state_.l()) /
           std::pow(1.0 + u2, state_.L_d() + 2.0) * gegenbauer(state_.k(), state_.nu_d(), y);
  }

  /// Zeros of the Laguerre factor in the variable t = 2Zr/eta.
  std::vector<double> laguerre_zeros() const {
    if (state_.k() == 0) return {};
    return RuleCache::instance().laguerre(2.0 * state_.l() + state_.D() - 2, state_.k())->nodes;
  }

  /// Zeros of the Gegenbauer factor in y = (1 - (eta p/Z)^2) / (1 + (eta p/Z)^2).
  std::vector<double> gegenbauer_zeros() const {
    if (state_.k() == 0) return {};
    const double nu = state_.nu_d();
    return RuleCache::instance().jacobi(nu - 0.5, nu - 0.5, state_.k())->nodes;
  }

 private:
  HydrogenicState state_;
  ExactValue pos_sq_, mom_sq_;
  double K_ = 0.0, Kp_ = 0.0;
};

namespace detail {

/// Adaptive integral over [lo, hi] split at interior points. The end panels
/// use double-exponential rules (tanh-sinh, or exp-sinh when hi is infinite),
/// which absorb algebraic endpoint singularities; interior panels Gauss-Kronrod.
template <class F>
BoundedValue integrate_panels(F f, double lo, const std::vector<double>& breaks, double hi,
                              double tol, bool singular_breaks = false) {
  using boost::math::quadrature::exp_sinh;
  using boost::math::quadrature::gauss_kronrod;
  using boost::math::quadrature::tanh_sinh;
  std::vector<double> edges{lo};
  edges.insert(edges.end(), breaks.begin(), breaks.end());
  if (std::isinf(hi) && edges.size() == 1) edges.push_back(1.0);
  edges.push_back(hi);

  double total = 0.0, error = 0.0, magnitude = 0.0;
  const size_t panels = edges.size() - 1;
  for (size_t i = 0; i < panels; ++i) {
    const double a = edges[i], b = edges[i + 1];
    double err = 0.0, l1 = 0.0, piece = 0.0;
    if (std::isinf(b)) {
      exp_sinh<double> rule;
      piece = rule.integrate(f, a, b, tol, &err, &l1);
    } else if (singular_breaks || i == 0 || i + 1 == panels) {
      tanh_sinh<double> rule;
      piece = rule.integrate(f, a, b, tol, &err, &l1);
    } else {
      piece = gauss_kronrod<double, 31>::integrate(f, a, b, 10, tol, &err, &l1);
    }
    total += piece;
    error += err;
    magnitude += l1;
  }
  error += 64.0 * TrackedSum::unit_roundoff * magnitude;
  if (!std::isfinite(total)) {
    throw Error(ErrorCode::QuadratureFailure, "adaptive quadrature produced a non-finite value");
  }
  return {total, error};
}

inline long node_count(const HydrogenicState& state, const QuadratureSpec& spec) {
  const long minimum = state.k() + 1;
  if (spec.nodes == 0) return minimum + 1;
  if (spec.nodes < 1) throw Error(ErrorCode::QuadratureFailure, "node count must be positive");
  return spec.nodes;
}

inline void require_converged(const BoundedValue& v, const QuadratureSpec& spec, const char* what) {
  if (!std::isfinite(v.value) || v.error > std::max(spec.rel_tol, 1e-6) * std::abs(v.value)) {
    throw Error(ErrorCode::QuadratureFailure, std::string(what) + " did not reach tolerance");
  }
}

}  // namespace detail

/// <r^alpha> = (1/(2 eta)) (eta/(2Z))^alpha int_0^inf w_{2L+1}(t) [L~_k^(2L+1)(t)]^2 t^(alpha+1) dt.
///
/// The Gauss rule uses the weight t^(2L+2+alpha) e^-t, which is integrable on
/// the whole domain alpha > -D-2l; what remains of the integrand is the squared
/// orthonormal polynomial, integrated exactly once nodes >= k+1.
inline MomentResult quad_r_moment(const HydrogenicState& state, double alpha,
                                  const QuadratureSpec& spec = {}) {
  require_order(state, alpha, Space::Position);
  const double eta = state.eta_d(), Z = state.Z();

  if (spec.rule == Rule::AdaptiveGK) {
    // In t = 2Zr/eta:  <r^alpha> = (eta/2Z)^(alpha+D) int R(eta t/2Z)^2 t^(alpha+D-1) dt.
    const RadialFunctions radial(state);
    const int D = state.D();
    const double to_r = eta / (2.0 * Z);
    auto integrand = [&](double t) { return radial.R_squared_times_power(t, alpha + D - 1); };
    BoundedValue v = detail::integrate_panels(integrand, 0.0, radial.laguerre_zeros(),
                                              std::numeric_limits<double>::infinity(), spec.rel_tol * 1e-2);
    const double scale = std::pow(to_r, alpha + D);
    v.value *= scale;
    v.error *= scale;
    detail::require_converged(v, spec, "adaptive position quadrature");
    return {v.value, v.error, Method::Quadrature, Space::Position, alpha, state};
  }

  const long k = state.k();
  const double lambda = 2.0 * state.L_d() + 1.0;
  const double shifted = lambda + 1.0 + alpha;
  const double lg_shifted = log_gamma(shifted + 1.0), lg_lambda = log_gamma(lambda + 1.0);
  const double log_scale = lg_shifted - lg_lambda - std::log(2.0 * eta) + alpha * std::log(eta / (2.0 * Z));

  const LaguerreRecurrence poly(lambda);
  auto sum_with = [&](long count) {
    const auto rule = RuleCache::instance().laguerre(shifted, count);
    CompensatedSum sum;
    for (size_t i = 0; i < rule->nodes.size(); ++i) {
      const double p = orthonormal_value(poly, k, rule->nodes[i]);
      sum.add(rule->weights[i] * p * p);
    }
    return sum.result();
  };
  const long count = detail::node_count(state, spec);
  const double coarse = sum_with(count);
  const double fine = sum_with(count + 4);
  const double value = std::exp(log_scale) * coarse;
  const double error =
      std::exp(log_scale) * std::abs(fine - coarse) +
      std::abs(value) * 64.0 * TrackedSum::unit_roundoff *
          (count + std::abs(lg_shifted) + std::abs(lg_lambda) + std::abs(log_scale));
  if (!std::isfinite(value)) throw Error(ErrorCode::QuadratureFailure, "position quadrature overflowed");
  return {value, error, Method::Quadrature, Space::Position, alpha, state};
}

/// <p^alpha> = (Z/eta)^alpha int_{-1}^{1} w*_nu(t) [C~_k^(nu)(t)]^2 (1-t)^(alpha/2) (1+t)^(1-alpha/2) dt,
/// by Gauss-Jacobi with exponents (nu + (alpha-1)/2, nu - (alpha-1)/2). Both
/// exceed -1 exactly on the open momentum domain.
inline MomentResult quad_p_moment(const HydrogenicState& state, double alpha,
                                  const QuadratureSpec& spec = {Rule::GaussJacobi}) {
  require_order(state, alpha, Space::Momentum);
  const double eta = state.eta_d(), Z = state.Z();

  if (spec.rule == Rule::AdaptiveGK) {
    // With eta p / Z = tan(theta/2), so that y = cos(theta):
    //   M^2 p^(alpha+D-1) dp = Z^-D K'^2 (Z/eta)^(alpha+D)
    //     * (1/2) sin(theta/2)^(2s+1) cos(theta/2)^(4L+5-2s) C(cos theta)^2 d theta,
    // with s = l + (alpha+D-2)/2.
    const RadialFunctions radial(state);
    const int D = state.D(), l = state.l(), k = state.k();
    const double nu = state.nu_d(), L = state.L_d();
    const double s_power = l + (alpha + D - 2) / 2.0;
    auto integrand = [&](double theta) {
      const double c = gegenbauer(k, nu, std::cos(theta));
      const double half = 0.5 * theta;
      return 0.5 * std::pow(std::sin(half), 2 * s_power + 1) *
             std::pow(std::cos(half), 4 * L + 5 - 2 * s_power) * c * c;
    };
    std::vector<double> breaks;
    for (double y : radial.gegenbauer_zeros()) breaks.push_back(std::acos(y));
    std::sort(breaks.begin(), breaks.end());
    BoundedValue v = detail::integrate_panels(integrand, 0.0, breaks, std::numbers::pi,
                                              spec.rel_tol * 1e-2);
    const double scale = std::pow(Z, -D) * radial.normalization_mom_squared().to_double() *
                         std::pow(Z / eta, alpha + D);
    v.value *= scale;
    v.error *= scale;
    detail::require_converged(v, spec, "adaptive momentum quadrature");
    return {v.value, v.error, Method::Quadrature, Space::Momentum, alpha, state};
  }

  const long k = state.k();
  const double nu = state.nu_d();
  const double a = nu + (alpha - 1.0) / 2.0;
  const double b = nu - (alpha - 1.0) / 2.0;
  const double lg[] = {log_gamma(a + 1.0), log_gamma(b + 1.0), log_gamma(a + b + 2.0)};
  const double log_mass = (a + b + 1.0) * std::numbers::ln2 + lg[0] + lg[1] - lg[2];
  const double log_scale = log_mass - gegenbauer_log_mass(nu) + alpha * std::log(Z / eta);

  const JacobiRecurrence poly(nu - 0.5, nu - 0.5);
  auto sum_with = [&](long count) {
    const auto rule = RuleCache::instance().jacobi(a, b, count);
    CompensatedSum sum;
    for (size_t i = 0; i < rule->nodes.size(); ++i) {
      const double p = orthonormal_value(poly, k, rule->nodes[i]);
      sum.add(rule->weights[i] * p * p);
    }
    return sum.result();
  };
  const long count = detail::node_count(state, spec);
  const double coarse = sum_with(count);
  const double fine = sum_with(count + 4);
  const double value = std::exp(log_scale) * coarse;
  double magnitude = std::abs(log_scale);
  for (double x : lg) magnitude += std::abs(x);
  const double error = std::exp(log_scale) * std::abs(fine - coarse) +
                       std::abs(value) * 64.0 * TrackedSum::unit_roundoff * (count + magnitude);
  if (!std::isfinite(value)) throw Error(ErrorCode::QuadratureFailure, "momentum quadrature overflowed");
  return {value, error, Method::Quadrature, Space::Momentum, alpha, state};
}

/// Surface area of the unit sphere in D dimensions, 2 pi^(D/2) / Gamma(D/2).
inline double unit_sphere_area(int D) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * D) / std::exp(log_gamma(0.5 * D));
}

/// Entropic moment W_a[rho] = int rho^a d^D r for an s-wave state, where the
/// density is R^2 / Omega_D:  W_a = Omega_D^(1-a) int R^(2a) r^(D-1) dr.
inline double entropic_moment(const HydrogenicState& state, double a) {
  if (state.l() != 0) {
    throw Error(ErrorCode::NotSWave, "entropic moments need an l = 0 state, got " + state.str());
  }
  if (!(a > 0.0)) throw Error(ErrorCode::NonpositiveParameters, "entropic order must be positive");
  const RadialFunctions radial(state);
  const int D = state.D();
  const double to_r = state.eta_d() / (2.0 * state.Z());
  auto integrand = [&](double t) {
    const double R2 = radial.R_squared_times_power(t, 0.0);
    return R2 == 0.0 ? 0.0 : std::pow(R2, a) * std::pow(t, D - 1);
  };
  BoundedValue v = detail::integrate_panels(integrand, 0.0, radial.laguerre_zeros(),
                                            std::numeric_limits<double>::infinity(), 1e-13, true);
  if (!(v.error <= 1e-9 * std::abs(v.value))) {
    throw Error(ErrorCode::QuadratureFailure, "entropic moment did not reach 1e-9 relative accuracy");
  }
  v.value *= std::pow(to_r, D);
  return std::pow(unit_sphere_area(D), 1.0 - a) * v.value;
}

}  // namespace hydromoments::oracle
