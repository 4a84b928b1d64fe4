#include "fracopt/error.hpp"

namespace fracopt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::ShiftViolation: return "ShiftViolation";
    case ErrorKind::InvalidStart: return "InvalidStart";
    case ErrorKind::InnerSolverFailure: return "InnerSolverFailure";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::WealthWipeout: return "WealthWipeout";
    case ErrorKind::DegenerateSeries: return "DegenerateSeries";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message) {}

}  // namespace fracopt
