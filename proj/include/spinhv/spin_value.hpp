#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace spinhv {

/// A spin magnitude or projection stored as twice its value, so half-integers
/// stay exact. Magnitudes are non-negative; projections may be negative.
struct SpinValue {
  int doubled = 0;

  static constexpr SpinValue from_doubled(int d) noexcept { return SpinValue{d}; }

  constexpr bool is_half_integer() const noexcept { return doubled % 2 != 0; }
  constexpr double value() const noexcept { return doubled / 2.0; }

  /// Number of eigenvalues 2s+1 of a spin-s component.
  constexpr int multiplicity() const noexcept { return doubled + 1; }

  /// s(s+1) scaled by 4, i.e. 2s(2s+2).
  constexpr std::int64_t quadrupled_casimir() const noexcept {
    return static_cast<std::int64_t>(doubled) * (doubled + 2);
  }

  constexpr double casimir() const noexcept { return value() * (value() + 1.0); }

  /// True when `projection` is one of s, s-1, ..., -s.
  constexpr bool admits_projection(SpinValue projection) const noexcept {
    const int p = projection.doubled;
    return p <= doubled && p >= -doubled && (doubled - p) % 2 == 0;
  }

  friend constexpr auto operator<=>(SpinValue, SpinValue) = default;
};

/// "3/2", "-1/2", "12".
std::string to_string(SpinValue v);

}  // namespace spinhv
