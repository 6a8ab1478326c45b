#pragma once

#include <cmath>
#include <limits>

namespace hydromoments {

/// Neumaier's variant of Kahan summation: tracks the low-order bits lost by
/// each addition, including when the incoming term dominates the running sum.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  double result() const { return sum + compensation; }
};

struct BoundedValue {
  double value = 0.0;
  /// Absolute error bound.
  double error = 0.0;

  double relative_error() const {
    if (value == 0.0) return error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return error / std::abs(value);
  }
};

/// Sum of signed terms with a running a-priori error bound.
///
/// Each term arrives with the number of rounding steps that produced it; the
/// bound is sum_j (steps_j + 1) u |t_j| plus the final rounding, which dominates
/// the compensated summation error. When the terms cancel, the bound relative
/// to the result grows accordingly.
class TrackedSum {
 public:
  static constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

  void add(double term, double rounding_steps) {
    acc_.add(term);
    magnitude_bound_ += (rounding_steps + 1.0) * std::abs(term);
    abs_sum_ += std::abs(term);
  }

  BoundedValue result() const {
    const double value = acc_.result();
    const double n = 1.0 + 1e-3;  // slack for the first-order gamma_n approximation
    const double error =
        n * unit_roundoff * (magnitude_bound_ + 2.0 * std::abs(value)) +
        4.0 * unit_roundoff * unit_roundoff * abs_sum_;
    return {value, error};
  }

  /// Cancellation factor sum|t_j| / |sum t_j|.
  double condition() const {
    const double value = std::abs(acc_.result());
    return value == 0.0 ? std::numeric_limits<double>::infinity() : abs_sum_ / value;
  }

 private:
  CompensatedSum acc_;
  double magnitude_bound_ = 0.0;
  double abs_sum_ = 0.0;
};

}  // namespace hydromoments
