#include "erythro/error.hpp"

namespace erythro {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::RoiOutOfBounds: return "RoiOutOfBounds";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::NoSeparation: return "NoSeparation";
    case ErrorCode::NoCellFound: return "NoCellFound";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::ZeroPerimeter: return "ZeroPerimeter";
    case ErrorCode::EmptyCell: return "EmptyCell";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeOutOfCanvas: return "ShapeOutOfCanvas";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace erythro
