#include "spinhv/error.hpp"
#include "spinhv/spin_value.hpp"

namespace spinhv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InfeasibleSpin: return "InfeasibleSpin";
    case ErrorCode::NonFiniteMatrix: return "NonFiniteMatrix";
    case ErrorCode::UnsupportedSpin: return "UnsupportedSpin";
    case ErrorCode::NotARotation: return "NotARotation";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ValueNotInSpectrum: return "ValueNotInSpectrum";
    case ErrorCode::LpNumericalFailure: return "LpNumericalFailure";
  }
  return "Unknown";
}

std::string to_string(SpinValue v) {
  if (v.is_half_integer()) return std::to_string(v.doubled) + "/2";
  return std::to_string(v.doubled / 2);
}

}  // namespace spinhv
