#pragma once

#include <array>

namespace spinhv {

/// Real 3x3 matrix indexed [k][l] with k, l in x, y, z order.
using Matrix3 = std::array<std::array<double, 3>, 3>;

enum class Axis { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr char axis_name(Axis a) noexcept {
  return a == Axis::x ? 'x' : (a == Axis::y ? 'y' : 'z');
}

}  // namespace spinhv
