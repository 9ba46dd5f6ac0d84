#include "spectrograph/error.hpp"

namespace spectrograph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfPartition: return "IndexOutOfPartition";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::InfeasibleDimensions: return "InfeasibleDimensions";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DefectiveMatrix: return "DefectiveMatrix";
    case ErrorCode::NilpotentMatrix: return "NilpotentMatrix";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NumericalResidue: return "NumericalResidue";
    case ErrorCode::SolverFailure: return "SolverFailure";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DefectiveMatrix:
    case ErrorCode::NilpotentMatrix:
    case ErrorCode::IllConditioned:
    case ErrorCode::SingularSystem:
    case ErrorCode::ParityViolation:
    case ErrorCode::NumericalResidue:
    case ErrorCode::SolverFailure:
      return true;
    default:
      return false;
  }
}

}  // namespace spectrograph
