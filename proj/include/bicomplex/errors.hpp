#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicomplex {

/// Stable machine-readable error codes. The CLI prints these verbatim.
enum class ErrorCode {
  NonIntegrable,
  BidegreeError,
  NotFunctional,
  OrderTooHigh,
  SingularPoint,
  InvalidChart,
  InvalidArgument,
  ParseError,
  UndeclaredName,
  DuplicateRelation,
  UnsupportedInput,
  IoError,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::BidegreeError: return "BidegreeError";
    case ErrorCode::NotFunctional: return "NotFunctional";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::InvalidChart: return "InvalidChart";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredName: return "UndeclaredName";
    case ErrorCode::DuplicateRelation: return "DuplicateRelation";
    case ErrorCode::UnsupportedInput: return "UnsupportedInput";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bicomplex
