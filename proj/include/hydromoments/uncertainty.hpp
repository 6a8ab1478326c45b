#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "hydromoments/momentum.hpp"
#include "hydromoments/oracle/quadrature.hpp"
#include "hydromoments/position.hpp"

namespace hydromoments {

enum class Inequality {
  HeisenbergGeneral,
  HeisenbergD2over4,
  SphericalL,
  Heisenberg3D,
  Heisenberg3Dab,
  PittBeckner,
  KineticBound,
  DaubechiesThakkar,
  DaubechiesThakkar3D,
  FermionProduct,
  FermionProduct3D,
};

inline std::string_view to_string(Inequality i) {
  switch (i) {
    case Inequality::HeisenbergGeneral: return "HeisenbergGeneral";
    case Inequality::HeisenbergD2over4: return "HeisenbergD2over4";
    case Inequality::SphericalL: return "SphericalL";
    case Inequality::Heisenberg3D: return "Heisenberg3D";
    case Inequality::Heisenberg3Dab: return "Heisenberg3Dab";
    case Inequality::PittBeckner: return "PittBeckner";
    case Inequality::KineticBound: return "KineticBound";
    case Inequality::DaubechiesThakkar: return "DaubechiesThakkar";
    case Inequality::DaubechiesThakkar3D: return "DaubechiesThakkar3D";
    case Inequality::FermionProduct: return "FermionProduct";
    case Inequality::FermionProduct3D: return "FermionProduct3D";
  }
  return "Unknown";
}

/// Daubechies-Thakkar relations are semiclassical; everything else is a theorem.
inline bool is_rigorous(Inequality i) {
  return i != Inequality::DaubechiesThakkar && i != Inequality::DaubechiesThakkar3D;
}

struct InequalityParams {
  HydrogenicState state;
  std::optional<double> a, b, alpha, k;
  int q = 2;
  int N = 1;
};

struct InequalityReport {
  Inequality name = Inequality::HeisenbergGeneral;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool satisfied = false;
  /// lhs <= rhs is the claim (Daubechies-Thakkar with k < 0).
  bool inverted = false;
  InequalityParams params;
};

/// Relative slack granted to satisfied checks, covering rounding in the
/// evaluated moments (equality cases such as k = 0 land exactly on the bound).
inline constexpr double inequality_tolerance = 1e-9;

namespace detail {

inline InequalityReport make_report(Inequality name, double lhs, double rhs, const InequalityParams& params,
                                    bool inverted = false) {
  InequalityReport r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.inverted = inverted;
  r.satisfied = inverted ? lhs <= rhs * (1.0 + inequality_tolerance) : lhs >= rhs * (1.0 - inequality_tolerance);
  r.params = params;
  return r;
}

inline double r_value(const HydrogenicState& s, double a) { return position_moment(s, a).decimal(); }
inline double p_value(const HydrogenicState& s, double a) { return p_moment(s, a).decimal(); }

/// One bracket of the general Heisenberg-like bound:
///   e D^(2/x) Gamma(1+D/2)^(2/D) / ((x e)^(2/x) Gamma(1+D/x)^(2/D)).
inline double heisenberg_factor(int D, double x) {
  return std::exp(1.0 + (2.0 / x) * std::log(D / (x * std::numbers::e)) +
                  (2.0 / D) * (log_gamma(1.0 + 0.5 * D) - log_gamma(1.0 + D / x)));
}

/// Three-dimensional form of the same bound for <r^a>^(1/a) <p^b>^(1/b):
///   (pi a b / (16 Gamma(3/a) Gamma(3/b)))^(1/3) (3/a)^(1/a) (3/b)^(1/b) e^(1 - 1/a - 1/b).
inline double heisenberg_3d(double a, double b) {
  return std::exp((std::log(std::numbers::pi * a * b / 16.0) - log_gamma(3.0 / a) - log_gamma(3.0 / b)) / 3.0 +
                  std::log(3.0 / a) / a + std::log(3.0 / b) / b + 1.0 - 1.0 / a - 1.0 / b);
}

}  // namespace detail

/// K_D(k) = D/(k+D) (2 pi)^k Gamma(1+D/2)^(k/D) / pi^(k/2).
inline double thomas_fermi_constant(int D, double k) {
  return D / (k + D) *
         std::exp(k * std::log(2.0 * std::numbers::pi) + (k / D) * log_gamma(1.0 + 0.5 * D) -
                  0.5 * k * std::log(std::numbers::pi));
}

/// c_k = 3 (3 pi^2)^(k/3) / (k+3).
inline double thakkar_constant(double k) {
  return 3.0 * std::pow(3.0 * std::numbers::pi * std::numbers::pi, k / 3.0) / (k + 3.0);
}

/// F(D, alpha, k) of the fermionic product bound.
inline double fermion_factor(int D, double alpha, double k) {
  const double s = 1.0 + k / D;
  const double log_beta = log_gamma(D / alpha) + log_gamma(2.0 + D / k) - log_gamma(D / alpha + 2.0 + D / k);
  const double log_omega = std::log(oracle::unit_sphere_area(D));
  const double tail = s * alpha + k;
  return std::exp(s * std::log(s) + (1.0 + 2.0 * k / D) * std::log(alpha) - (k / D) * (log_omega + log_beta) +
                  (k * std::log(k) - tail * std::log(tail)) / alpha);
}

/// Script F(D, alpha, k) = K_D(k) F(D, alpha, k).
inline double fermion_constant(int D, double alpha, double k) {
  return thomas_fermi_constant(D, k) * fermion_factor(D, alpha, k);
}

/// <r^a>^(2/a) <p^b>^(2/b) against the product of the two brackets. Siblings:
/// <r^2><p^2> >= D^2/4 and >= (l+D/2)^2; for D = 3 the three-dimensional form,
/// and its a = b power when a = b.
inline std::vector<InequalityReport> heisenberg_general(const HydrogenicState& state, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) {
    throw Error(ErrorCode::OrderOutOfDomain, "Heisenberg-like bounds need a > 0 and b > 0");
  }
  require_order(state, a, Space::Position);
  require_order(state, b, Space::Momentum);
  const int D = state.D();
  InequalityParams params;
  params.state = state;
  params.a = a;
  params.b = b;
  const double ra = detail::r_value(state, a), pb = detail::p_value(state, b);

  std::vector<InequalityReport> out;
  out.push_back(detail::make_report(Inequality::HeisenbergGeneral, std::pow(ra, 2.0 / a) * std::pow(pb, 2.0 / b),
                                    detail::heisenberg_factor(D, a) * detail::heisenberg_factor(D, b), params));

  InequalityParams p2;
  p2.state = state;
  p2.a = 2.0;
  p2.b = 2.0;
  const double r2p2 = detail::r_value(state, 2) * detail::p_value(state, 2);
  out.push_back(detail::make_report(Inequality::HeisenbergD2over4, r2p2, D * D / 4.0, p2));
  const double lD = state.l() + 0.5 * D;
  out.push_back(detail::make_report(Inequality::SphericalL, r2p2, lD * lD, p2));

  if (D == 3) {
    out.push_back(detail::make_report(Inequality::Heisenberg3D, std::pow(ra, 1.0 / a) * std::pow(pb, 1.0 / b),
                                      detail::heisenberg_3d(a, b), params));
    if (a == b) {
      out.push_back(
          detail::make_report(Inequality::Heisenberg3Dab, ra * pb, std::pow(detail::heisenberg_3d(a, a), a), params));
    }
  }
  return out;
}

/// <p^alpha> >= 2^alpha [Gamma((D+alpha)/4) / Gamma((D-alpha)/4)]^2 <r^-alpha>, 0 <= alpha < D.
/// At alpha = 2 (D > 2) also T = <p^2>/2 >= (D-2)^2/8 <r^-2>.
inline std::vector<InequalityReport> pitt_beckner(const HydrogenicState& state, double alpha) {
  const int D = state.D();
  if (!(alpha >= 0.0 && alpha < D)) {
    throw Error(ErrorCode::OrderOutOfDomain, "Pitt-Beckner needs 0 <= alpha < D");
  }
  require_order(state, alpha, Space::Momentum);
  require_order(state, -alpha, Space::Position);
  InequalityParams params;
  params.state = state;
  params.alpha = alpha;
  const double p = detail::p_value(state, alpha);
  const double r = detail::r_value(state, -alpha);
  const double constant =
      std::exp(alpha * std::numbers::ln2 + 2.0 * (log_gamma((D + alpha) / 4.0) - log_gamma((D - alpha) / 4.0)));

  std::vector<InequalityReport> out;
  out.push_back(detail::make_report(Inequality::PittBeckner, p, constant * r, params));
  if (alpha == 2.0 && D > 2) {
    out.push_back(detail::make_report(Inequality::KineticBound, p / 2.0, (D - 2.0) * (D - 2.0) / 8.0 * r, params));
  }
  return out;
}

/// <p^k> >= K_D(k) q^(-k/D) W_{1+k/D}[rho], reversed for k < 0. For D = 3, q = 2 also
/// the same relation written with c_k.
inline std::vector<InequalityReport> daubechies_thakkar(const HydrogenicState& state, double k, int q = 2) {
  if (state.l() != 0) {
    throw Error(ErrorCode::NotSWave, "Daubechies-Thakkar relations need an l = 0 state, got " + state.str());
  }
  if (q < 1) throw Error(ErrorCode::NonpositiveParameters, "q must be at least 1");
  const int D = state.D();
  require_order(state, k, Space::Momentum);
  if (!(1.0 + k / D > 0.0)) {
    throw Error(ErrorCode::OrderOutOfDomain, "W_{1+k/D} needs k > -D");
  }
  InequalityParams params;
  params.state = state;
  params.k = k;
  params.q = q;
  const double p = detail::p_value(state, k);
  const double W = oracle::entropic_moment(state, 1.0 + k / D);
  const bool inverted = k < 0.0;

  std::vector<InequalityReport> out;
  out.push_back(detail::make_report(Inequality::DaubechiesThakkar, p,
                                    thomas_fermi_constant(D, k) * std::pow(q, -k / D) * W, params, inverted));
  if (D == 3 && q == 2) {
    out.push_back(detail::make_report(Inequality::DaubechiesThakkar3D, p, thakkar_constant(k) * W, params, inverted));
  }
  return out;
}

/// <r^alpha>^(k/alpha) <p^k> >= Script F(D, alpha, k) q^(-k/D) N^(1 + k(1/alpha + 1/D)).
inline std::vector<InequalityReport> fermion_product(const HydrogenicState& state, double alpha, double k, int q = 2,
                                                     int N = 1) {
  if (!(alpha > 0.0 && k > 0.0) || q < 1 || N < 1) {
    throw Error(ErrorCode::NonpositiveParameters, "fermionic product bound needs alpha, k > 0 and q, N >= 1");
  }
  require_order(state, alpha, Space::Position);
  require_order(state, k, Space::Momentum);
  const int D = state.D();
  InequalityParams params;
  params.state = state;
  params.alpha = alpha;
  params.k = k;
  params.q = q;
  params.N = N;
  const double lhs = std::pow(detail::r_value(state, alpha), k / alpha) * detail::p_value(state, k);
  const double constant = fermion_constant(D, alpha, k);

  std::vector<InequalityReport> out;
  out.push_back(detail::make_report(Inequality::FermionProduct, lhs,
                                    constant * std::pow(q, -k / D) * std::pow(N, 1.0 + k * (1.0 / alpha + 1.0 / D)),
                                    params));
  if (D == 3 && q == 2) {
    out.push_back(detail::make_report(Inequality::FermionProduct3D, lhs,
                                      constant * std::pow(2.0, -k / 3.0) * std::pow(N, k / alpha + (k + 3.0) / 3.0),
                                      params));
  }
  return out;
}

}  // namespace hydromoments
