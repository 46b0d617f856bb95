#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3bps {

enum class ErrorCode {
  ZeroLeadingTerm,
  BadConstantTerm,
  FractionalExponent,
  BeyondTruncation,
  NotSymmetric,
  IntegralityViolation,
  InvariantViolation,
  InsufficientOrder,
  SingularSystem,
  InconsistentSystem,
  NonIntegral,
  WindowTooSmall,
  DegenerateLattice,
  NonpositiveDiscriminant,
  ZeroVector,
  AllZeroDegrees,
  InexactDivision,
  LeadingCoefficientZero,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; code() identifies the
// contract that was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace k3bps
