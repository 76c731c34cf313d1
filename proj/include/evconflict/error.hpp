#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evconflict {

enum class ErrorCode {
  EmptyFrame,
  DuplicateLabel,
  FrameTooLarge,
  UnknownLabel,
  NegativeMass,
  EmptySetMass,
  UnnormalizedMass,
  FrameMismatch,
  TotalConflict,
  BothEmpty,
  BadThreshold,
  FrameTooLargeForMeasure,
  FrameTooLargeForCheck,
  InternalConsistency,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (CLI, bindings) can map it to an exit status or exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evconflict
