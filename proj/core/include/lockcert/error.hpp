#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lockcert {

enum class ErrorCode {
  InvalidArgument,
  RadicandNegative,
  DegenerateAngle,
  SampleOutOfBounds,
  EmptySamples,
  OverrideInconsistent,
  InvariantBreach,
  HypothesesNotChecked,
  StructuralMismatch,
  OutOfDomain,
  DimensionUnsupported,
  NotAsymptoticallyFlat,
  CurvatureHypothesisViolated,
  NonpositiveMeanCurvature,
  InnerBoundary,
  ParseError,
  ValidationError,
  InvalidGrid,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this exception. Errors
// raised while processing a specific corner carry its 1-based index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> interface_index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> interface_index() const noexcept { return interface_; }

  // Re-throws with the interface index attached (1-based).
  [[noreturn]] void rethrow_at(std::size_t interface_index) const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> interface_;
};

}  // namespace lockcert
