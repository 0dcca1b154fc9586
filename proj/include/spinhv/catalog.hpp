#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spinhv/bounds.hpp"

namespace spinhv::catalog {

/// Spin-1 inequality with classical bounds -2 / -3.
CoefficientMatrix example1();
/// Spin-1 inequality with classical bounds -4 / -7.
CoefficientMatrix example2();
/// Spin-2 inequality with classical bounds -20 / -34.
CoefficientMatrix example3();
/// 45 degree rotation about z; its quantum value is -s(s+1) for every s.
CoefficientMatrix z45_rotation();

/// "example1", "example2", "example3", "z45-rotation" (alias "eq9-rotation"),
/// "identity".
std::optional<CoefficientMatrix> named(std::string_view name);
std::vector<std::string_view> names();

}  // namespace spinhv::catalog
