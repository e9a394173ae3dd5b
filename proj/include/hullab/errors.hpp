#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullab {

enum class ErrorCode {
  InvalidArgument,
  DegenerateDenominator,
  PoleAtSource,
  TruncationError,
  BranchPole,
  AliasingError,
  InvalidArcUnion,
  UnknownHull,
  CertificateNotFound,
  VerificationFailed,
  NotInArc,
  ScheduleExhausted,
  StepTooSmall,
  TruncationExceeded,
  NonUnimodularBoundary,
  TooCloseToPoint,
  ZeroOnBoundary,
  CurveEscapedTube,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hullab
