#include "polar/errors.hpp"

namespace polar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::SliceMismatch: return "SliceMismatch";
    case ErrorCode::ParallelInput: return "ParallelInput";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::EmptyForest: return "EmptyForest";
    case ErrorCode::InvalidChamber: return "InvalidChamber";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace polar
