#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectrograph {

enum class ErrorCode {
  NonSquare,
  NonFinite,
  DimensionMismatch,
  ZeroSignal,
  InvalidArgument,
  IndexOutOfPartition,
  TooSmall,
  SizeOverflow,
  InfeasibleDimensions,
  ParseError,
  IoError,
  DefectiveMatrix,
  NilpotentMatrix,
  IllConditioned,
  SingularSystem,
  ParityViolation,
  NumericalResidue,
  SolverFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerics (as opposed to bad input).
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool numerical() const noexcept { return is_numerical(code_); }

 private:
  ErrorCode code_;
};

}  // namespace spectrograph
