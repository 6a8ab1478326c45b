#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hydromoments {

enum class ErrorCode {
  DimensionTooSmall,
  QuantumNumberOutOfRange,
  NonpositiveCharge,
  NonpositiveArgument,
  UnsupportedArgument,
  PoleInBottomParameter,
  NonTerminating,
  OrderOutOfDomain,
  OrderOutOfRegime,
  CancellationOverflow,
  SingularDenominator,
  NotCircular,
  NotSWave,
  QuadratureFailure,
  NonpositiveParameters,
  ParameterOutOfRange,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::QuantumNumberOutOfRange: return "QuantumNumberOutOfRange";
    case ErrorCode::NonpositiveCharge: return "NonpositiveCharge";
    case ErrorCode::NonpositiveArgument: return "NonpositiveArgument";
    case ErrorCode::UnsupportedArgument: return "UnsupportedArgument";
    case ErrorCode::PoleInBottomParameter: return "PoleInBottomParameter";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::OrderOutOfDomain: return "OrderOutOfDomain";
    case ErrorCode::OrderOutOfRegime: return "OrderOutOfRegime";
    case ErrorCode::CancellationOverflow: return "CancellationOverflow";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::NotSWave: return "NotSWave";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::NonpositiveParameters: return "NonpositiveParameters";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by the caller's inputs (quantum numbers, orders),
  /// as opposed to numerical breakdown.
  bool is_domain_error() const noexcept {
    return code_ != ErrorCode::CancellationOverflow &&
           code_ != ErrorCode::QuadratureFailure;
  }

 private:
  ErrorCode code_;
};

}  // namespace hydromoments
