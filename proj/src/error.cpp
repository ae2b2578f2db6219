#include "grassgeo/error.hpp"

namespace grassgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::CutLocus: return "CutLocus";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::GoldenMismatch: return "GoldenMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace grassgeo
