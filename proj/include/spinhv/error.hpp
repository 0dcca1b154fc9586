#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinhv {

enum class ErrorCode {
  InvalidArgument,
  InfeasibleSpin,
  NonFiniteMatrix,
  UnsupportedSpin,
  NotARotation,
  EigensolverFailure,
  DimensionMismatch,
  ValueNotInSpectrum,
  LpNumericalFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code distinguishes the cases
/// callers are expected to branch on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace spinhv
