#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracopt {

/// Failure categories raised by the library. Callers (notably the CLI)
/// dispatch on the kind rather than on the message text.
enum class ErrorKind {
  DimensionError,
  InvalidMatrix,
  NoConvergence,
  InvalidParameter,
  PositivityViolation,
  NumericalBreakdown,
  ShiftViolation,
  InvalidStart,
  InnerSolverFailure,
  DegenerateModel,
  ParseError,
  InsufficientData,
  WealthWipeout,
  DegenerateSeries,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fracopt
