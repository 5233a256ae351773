#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erythro {

enum class ErrorCode {
  UnsupportedFormat,
  CorruptFile,
  IoFailure,
  RoiOutOfBounds,
  EmptyImage,
  NoSeparation,
  NoCellFound,
  EmptyMask,
  ZeroPerimeter,
  EmptyCell,
  DimensionMismatch,
  ShapeOutOfCanvas,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI and the HTTP service can map it to an exit code or status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace erythro
