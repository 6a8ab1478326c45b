#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "hydromoments/specfun/rational.hpp"

namespace hydromoments {

/// A bound state (n, l) of the D-dimensional hydrogenic system with charge Z.
///
/// Derived quantities are kept exactly, since for even D they are
/// half-integers:
///   eta = n + (D-3)/2    principal hyperquantum number
///   L   = l + (D-3)/2    grand orbital number
///   nu  = L + 1          Gegenbauer parameter of the momentum wavefunction
///   k   = n - l - 1      degree of the radial polynomials
/// Construct with make_state; a default-constructed state is the 3D ground state.
class HydrogenicState {
 public:
  HydrogenicState() : HydrogenicState(3, 1, 0, 1.0) {}

  int D() const { return D_; }
  int n() const { return n_; }
  int l() const { return l_; }
  double Z() const { return Z_; }
  int k() const { return n_ - l_ - 1; }

  const Rational& eta() const { return eta_; }
  const Rational& L() const { return L_; }
  const Rational& nu() const { return nu_; }
  /// Z as an exact rational (exact conversion of the stored double).
  Rational Z_exact() const { return rational_from_double(Z_); }

  double eta_d() const { return eta_.get_d(); }
  double L_d() const { return L_.get_d(); }
  double nu_d() const { return nu_.get_d(); }

  bool is_circular() const { return l_ == n_ - 1; }

  std::string str() const {
    std::ostringstream os;
    os << "(D=" << D_ << ", n=" << n_ << ", l=" << l_ << ", Z=" << Z_ << ")";
    return os.str();
  }

  friend bool operator==(const HydrogenicState& a, const HydrogenicState& b) {
    return a.D_ == b.D_ && a.n_ == b.n_ && a.l_ == b.l_ && a.Z_ == b.Z_;
  }

  friend HydrogenicState make_state(int D, int n, int l, double Z);

 private:
  HydrogenicState(int D, int n, int l, double Z)
      : D_(D),
        n_(n),
        l_(l),
        Z_(Z),
        eta_(make_rational(2L * n + D - 3, 2)),
        L_(make_rational(2L * l + D - 3, 2)),
        nu_(make_rational(2L * l + D - 1, 2)) {}

  int D_, n_, l_;
  double Z_;
  Rational eta_, L_, nu_;
};

inline HydrogenicState make_state(int D, int n, int l, double Z) {
  if (D < 2) {
    throw Error(ErrorCode::DimensionTooSmall, "D must be at least 2, got " + std::to_string(D));
  }
  if (n < 1 || l < 0 || l >= n) {
    throw Error(ErrorCode::QuantumNumberOutOfRange,
                "need n >= 1 and 0 <= l <= n-1, got n=" + std::to_string(n) +
                    ", l=" + std::to_string(l));
  }
  if (!(Z > 0.0) || !std::isfinite(Z)) {
    throw Error(ErrorCode::NonpositiveCharge, "Z must be positive and finite");
  }
  return HydrogenicState(D, n, l, Z);
}

enum class Space { Position, Momentum };

inline std::string_view to_string(Space s) { return s == Space::Position ? "r" : "p"; }

struct MomentOrder {
  double alpha = 0.0;
  Space space = Space::Position;
};

/// Open interval of orders alpha for which the moment exists.
struct OrderInterval {
  double lower;
  double upper;  // +inf for position moments

  bool contains(double alpha) const { return alpha > lower && alpha < upper; }

  std::string str() const {
    std::ostringstream os;
    os << "(" << lower << ", ";
    if (std::isinf(upper)) {
      os << "inf";
    } else {
      os << upper;
    }
    os << ")";
    return os.str();
  }
};

/// Position: alpha > -D - 2l.  Momentum: -D - 2l < alpha < D + 2l + 2.
inline OrderInterval valid_interval(const HydrogenicState& state, Space space) {
  const double lower = -static_cast<double>(state.D() + 2 * state.l());
  if (space == Space::Position) return {lower, std::numeric_limits<double>::infinity()};
  return {lower, static_cast<double>(state.D() + 2 * state.l() + 2)};
}

inline bool check_order(const HydrogenicState& state, const MomentOrder& order) {
  return std::isfinite(order.alpha) && valid_interval(state, order.space).contains(order.alpha);
}

inline void require_order(const HydrogenicState& state, double alpha, Space space) {
  if (!check_order(state, {alpha, space})) {
    std::ostringstream os;
    os << "<" << to_string(space) << "^" << alpha << "> for " << state.str()
       << " needs alpha in " << valid_interval(state, space).str();
    throw Error(ErrorCode::OrderOutOfDomain, os.str());
  }
}

}  // namespace hydromoments
