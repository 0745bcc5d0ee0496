#include "lockcert/error.hpp"

namespace lockcert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RadicandNegative: return "RadicandNegative";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::SampleOutOfBounds: return "SampleOutOfBounds";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::OverrideInconsistent: return "OverrideInconsistent";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
    case ErrorCode::HypothesesNotChecked: return "HypothesesNotChecked";
    case ErrorCode::StructuralMismatch: return "StructuralMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::NotAsymptoticallyFlat: return "NotAsymptoticallyFlat";
    case ErrorCode::CurvatureHypothesisViolated: return "CurvatureHypothesisViolated";
    case ErrorCode::NonpositiveMeanCurvature: return "NonpositiveMeanCurvature";
    case ErrorCode::InnerBoundary: return "InnerBoundary";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> interface_index)
    : std::runtime_error(message), code_(code), interface_(interface_index) {}

void Error::rethrow_at(std::size_t interface_index) const {
  throw Error(code_, "interface " + std::to_string(interface_index) + ": " + what(),
              interface_index);
}

}  // namespace lockcert
