#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "spinhv/spin_value.hpp"

namespace spinhv {

/// Deterministic hidden-variable values for the three orthogonal spin
/// components of one party. Ordered lexicographically on the doubled
/// components.
struct Assignment {
  SpinValue x;
  SpinValue y;
  SpinValue z;

  static constexpr Assignment from_doubled(int dx, int dy, int dz) noexcept {
    return {SpinValue{dx}, SpinValue{dy}, SpinValue{dz}};
  }

  constexpr std::array<int, 3> doubled() const noexcept {
    return {x.doubled, y.doubled, z.doubled};
  }
  std::array<double, 3> values() const noexcept {
    return {x.value(), y.value(), z.value()};
  }

  /// Sum of doubled squares, i.e. 4 (s_x^2 + s_y^2 + s_z^2).
  constexpr std::int64_t quadrupled_square_sum() const noexcept {
    return static_cast<std::int64_t>(x.doubled) * x.doubled +
           static_cast<std::int64_t>(y.doubled) * y.doubled +
           static_cast<std::int64_t>(z.doubled) * z.doubled;
  }

  friend constexpr auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// All (2s+1)^3 assignments, ascending lexicographic order.
std::vector<Assignment> enumerate_unconstrained(SpinValue s);

/// Assignments with s_x^2 + s_y^2 + s_z^2 = s(s+1), same order. Computed by
/// filtering, with no reference to the closed-form feasibility test.
std::vector<Assignment> enumerate_constrained(SpinValue s);

/// Direct search for a single magnitude-conserving assignment. Used as the
/// independent oracle for magnitude_feasible.
bool feasible_by_enumeration(SpinValue s);

/// Histogram of 4(s_x^2 + s_y^2 + s_z^2) over all unconstrained assignments.
std::map<std::int64_t, std::uint64_t> squared_magnitude_classes(SpinValue s);

}  // namespace spinhv
