#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grassgeo {

enum class ErrorCode {
  NotHermitian,
  NotUnitary,
  NotSkew,
  NegativeEigenvalue,
  ShapeMismatch,
  NotAProjector,
  DimensionMismatch,
  RankMismatch,
  CutLocus,
  NotTangent,
  DegenerateVertex,
  BadRank,
  BadRadius,
  BadParameter,
  GoldenMismatch,
  NotFound,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers dispatch on code().
/// Spectral failures near the branch cut carry the offending phase.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<double> phase = std::nullopt)
      : std::runtime_error(what), code_(code), phase_(phase) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> phase() const noexcept { return phase_; }

 private:
  ErrorCode code_;
  std::optional<double> phase_;
};

}  // namespace grassgeo
