#pragma once

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "hydromoments/specfun/rational.hpp"

namespace hydromoments {

/// An exact number of the form coeff * pi^(pi_twice / 2).
///
/// Closed under multiplication, division and integer powers. Addition is only
/// defined between values carrying the same power of pi (or zero), which is all
/// the moment formulas ever need.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(Rational coeff, int pi_twice = 0) : coeff_(std::move(coeff)), pi_twice_(pi_twice) {
    canonicalize();
  }
  ExactValue(long value) : ExactValue(Rational(value)) {}

  static ExactValue pi_power(int pi_twice) { return ExactValue(Rational(1), pi_twice); }

  const Rational& coeff() const { return coeff_; }
  /// Twice the exponent of pi.
  int pi_twice() const { return pi_twice_; }
  Rational pi_pow() const { return make_rational(pi_twice_, 2); }

  bool is_zero() const { return coeff_ == 0; }
  int sign() const { return sgn(coeff_); }

  double to_double() const {
    return coeff_.get_d() * std::pow(std::numbers::pi, 0.5 * pi_twice_);
  }

  ExactValue& operator*=(const ExactValue& rhs) {
    coeff_ *= rhs.coeff_;
    pi_twice_ += rhs.pi_twice_;
    canonicalize();
    return *this;
  }
  ExactValue& operator/=(const ExactValue& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::SingularDenominator, "division by exact zero");
    coeff_ /= rhs.coeff_;
    pi_twice_ -= rhs.pi_twice_;
    canonicalize();
    return *this;
  }
  ExactValue& operator+=(const ExactValue& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (pi_twice_ != rhs.pi_twice_) {
      throw Error(ErrorCode::UnsupportedArgument, "sum of exact values with different powers of pi");
    }
    coeff_ += rhs.coeff_;
    canonicalize();
    return *this;
  }
  ExactValue& operator-=(const ExactValue& rhs) { return *this += -rhs; }

  ExactValue operator-() const { return ExactValue(-coeff_, pi_twice_); }

  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.pi_twice_ == b.pi_twice_ && a.coeff_ == b.coeff_;
  }

  friend ExactValue pow(const ExactValue& base, long exponent) {
    return ExactValue(pow(base.coeff_, exponent), static_cast<int>(base.pi_twice_ * exponent));
  }

  /// Human form, e.g. "16/3 * pi^-1".
  std::string str() const {
    std::string s = to_string(coeff_);
    if (pi_twice_ != 0) s += " * pi^" + to_string(pi_pow());
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.str(); }

 private:
  void canonicalize() {
    coeff_.canonicalize();
    if (coeff_ == 0) pi_twice_ = 0;
  }

  Rational coeff_{0};
  int pi_twice_ = 0;
};

}  // namespace hydromoments
