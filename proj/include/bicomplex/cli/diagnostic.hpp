#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicomplex/errors.hpp"

namespace bicomplex::cli {

/// Input problem with a source position (1-based; 0 when unknown) and the
/// tokens that would have been accepted.
struct Diagnostic {
  ErrorCode code = ErrorCode::ParseError;
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<std::string> expected;

  /// "3:7: error[ParseError]: message (expected one of: ...)"
  std::string str() const;
};

class DiagnosticError : public Error {
 public:
  explicit DiagnosticError(Diagnostic d)
      : Error(d.code, d.str()), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

/// Exit status for an error code: 3 for internal invariants, 2 otherwise.
int exit_status(ErrorCode code);

}  // namespace bicomplex::cli
