#include "steklov/error.hpp"

namespace steklov {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonConvergentTail: return "NonConvergentTail";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OrderOutOfScope: return "OrderOutOfScope";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonMonotoneAbscissae: return "NonMonotoneAbscissae";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::UnknownKernel: return "UnknownKernel";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace steklov
