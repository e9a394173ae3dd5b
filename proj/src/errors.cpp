#include "hullab/errors.hpp"

namespace hullab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::PoleAtSource: return "PoleAtSource";
    case ErrorCode::TruncationError: return "TruncationError";
    case ErrorCode::BranchPole: return "BranchPole";
    case ErrorCode::AliasingError: return "AliasingError";
    case ErrorCode::InvalidArcUnion: return "InvalidArcUnion";
    case ErrorCode::UnknownHull: return "UnknownHull";
    case ErrorCode::CertificateNotFound: return "CertificateNotFound";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotInArc: return "NotInArc";
    case ErrorCode::ScheduleExhausted: return "ScheduleExhausted";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::NonUnimodularBoundary: return "NonUnimodularBoundary";
    case ErrorCode::TooCloseToPoint: return "TooCloseToPoint";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::CurveEscapedTube: return "CurveEscapedTube";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace hullab
