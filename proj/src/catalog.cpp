#include "spinhv/catalog.hpp"

#include <cmath>

namespace spinhv::catalog {

CoefficientMatrix example1() {
  return CoefficientMatrix(Matrix3{{{-1, -1, 0}, {-1, 1, 0}, {0, 0, -1}}});
}

CoefficientMatrix example2() {
  return CoefficientMatrix(Matrix3{{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, 3}}});
}

CoefficientMatrix example3() {
  return CoefficientMatrix(Matrix3{{{2.5, 2, -1}, {2.5, -2, -1}, {-1.5, 0, -3}}});
}

CoefficientMatrix z45_rotation() {
  const double r = std::sqrt(0.5);
  return CoefficientMatrix(Matrix3{{{r, -r, 0}, {r, r, 0}, {0, 0, 1}}});
}

std::optional<CoefficientMatrix> named(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "example3") return example3();
  if (name == "z45-rotation" || name == "eq9-rotation") return z45_rotation();
  if (name == "identity") return CoefficientMatrix::identity();
  return std::nullopt;
}

std::vector<std::string_view> names() {
  return {"example1", "example2", "example3", "z45-rotation", "eq9-rotation", "identity"};
}

}  // namespace spinhv::catalog
