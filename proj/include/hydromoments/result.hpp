#pragma once

#include <string_view>
#include <variant>

#include "hydromoments/specfun/exact_value.hpp"
#include "hydromoments/states.hpp"

namespace hydromoments {

enum class Method {
  Hyp3F2,
  Hyp5F4,
  SingleSum,
  DoubleSum,
  ClosedForm,
  Reflection,
  Quadrature,
  Asymptotic,
};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Hyp3F2: return "Hyp3F2";
    case Method::Hyp5F4: return "Hyp5F4";
    case Method::SingleSum: return "SingleSum";
    case Method::DoubleSum: return "DoubleSum";
    case Method::ClosedForm: return "ClosedForm";
    case Method::Reflection: return "Reflection";
    case Method::Quadrature: return "Quadrature";
    case Method::Asymptotic: return "Asymptotic";
  }
  return "Unknown";
}

/// Evaluation mode.
///   Auto:  exact for integer orders, otherwise floating point with a
///          rational re-summation when cancellation is detected.
///   Exact: integer orders only.
///   Float: floating point; raises CancellationOverflow instead of recovering.
enum class Mode { Auto, Exact, Float };

struct MomentResult {
  std::variant<ExactValue, double> value;
  /// Absolute error bound; zero for exact values.
  double error_estimate = 0.0;
  Method method = Method::Hyp3F2;
  Space space = Space::Position;
  double alpha = 0.0;
  HydrogenicState state;

  bool is_exact() const { return std::holds_alternative<ExactValue>(value); }
  const ExactValue& exact() const { return std::get<ExactValue>(value); }

  double decimal() const {
    if (const auto* e = std::get_if<ExactValue>(&value)) return e->to_double();
    return std::get<double>(value);
  }
};

inline bool is_integer_order(double alpha) {
  return std::isfinite(alpha) && std::floor(alpha) == alpha && std::abs(alpha) < 1e9;
}

inline bool use_exact(Mode mode, double alpha) {
  if (mode == Mode::Exact) {
    if (!is_integer_order(alpha)) {
      throw Error(ErrorCode::UnsupportedArgument, "exact mode needs an integer order");
    }
    return true;
  }
  return mode == Mode::Auto && is_integer_order(alpha);
}

}  // namespace hydromoments
