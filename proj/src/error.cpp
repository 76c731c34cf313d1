#include "evconflict/error.hpp"

namespace evconflict {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyFrame: return "EmptyFrame";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::FrameTooLarge: return "FrameTooLarge";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::EmptySetMass: return "EmptySetMass";
    case ErrorCode::UnnormalizedMass: return "UnnormalizedMass";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::TotalConflict: return "TotalConflict";
    case ErrorCode::BothEmpty: return "BothEmpty";
    case ErrorCode::BadThreshold: return "BadThreshold";
    case ErrorCode::FrameTooLargeForMeasure: return "FrameTooLargeForMeasure";
    case ErrorCode::FrameTooLargeForCheck: return "FrameTooLargeForCheck";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace evconflict
