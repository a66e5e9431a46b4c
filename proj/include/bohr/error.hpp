//
// file: error.hpp
//
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

enum class ErrorCode {
  InvalidMatrix,
  DimensionMismatch,
  NotHermitian,
  NonrealTrace,
  NegativeTrace,
  RadiusOutOfRange,
  BudgetBelowAlpha0,
  PreconditionViolated,
  InvalidOrder,
  RadiusNotAboveOneThird,
  ShrinkNotAllowed,
  BadLength,
  NotPSD,
  NotContraction,
  InvalidConfig,
  InvalidSeries,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonrealTrace: return "NonrealTrace";
    case ErrorCode::NegativeTrace: return "NegativeTrace";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::BudgetBelowAlpha0: return "BudgetBelowAlpha0";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::RadiusNotAboveOneThird: return "RadiusNotAboveOneThird";
    case ErrorCode::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidSeries: return "InvalidSeries";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bohr
