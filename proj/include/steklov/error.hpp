#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steklov {

enum class ErrorCode {
  InvalidRange,
  DomainViolation,
  NonConvergentTail,
  OrderTooLarge,
  OrderOutOfScope,
  InvalidArgument,
  ParseError,
  NonMonotoneAbscissae,
  TooFewPoints,
  UnknownFunction,
  UnknownKernel,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code; the
/// CLI maps it to an exit status and a JSON diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steklov
