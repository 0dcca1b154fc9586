#pragma once

#include <optional>
#include <span>

#include "spinhv/assignments.hpp"
#include "spinhv/matrix3.hpp"
#include "spinhv/spin_value.hpp"

namespace spinhv {

/// Coefficients c_kl of sum_kl c_kl <S_k^(A) S_l^(B)>.
class CoefficientMatrix {
public:
  CoefficientMatrix() = default;
  explicit CoefficientMatrix(const Matrix3& entries) : c_(entries) {}

  /// Nine entries, row-major, x/y/z ordering.
  static CoefficientMatrix from_row_major(std::span<const double, 9> entries);
  static CoefficientMatrix identity();

  double operator()(int k, int l) const { return c_[k][l]; }
  const Matrix3& entries() const noexcept { return c_; }

  bool is_finite() const noexcept;

  /// C^T C = I and det C = +1, each within `tol` (max-abs).
  bool is_rotation(double tol = 1e-12) const noexcept;

  CoefficientMatrix scaled(double factor) const;
  CoefficientMatrix transposed() const;

  /// a^T C b for real-valued a and b.
  double bilinear(const std::array<double, 3>& a, const std::array<double, 3>& b) const noexcept;
  double bilinear(const Assignment& a, const Assignment& b) const noexcept {
    return bilinear(a.values(), b.values());
  }

private:
  Matrix3 c_{};
};

struct BoundResult {
  double value = 0.0;
  Assignment witness_a;
  Assignment witness_b;
};

/// Both classical bounds for one (C, s). `constrained` is empty when no
/// magnitude-conserving assignment exists for s (state-independent
/// infeasibility).
struct BoundsReport {
  SpinValue spin;
  std::optional<BoundResult> constrained;
  BoundResult unconstrained;
};

/// Ties between candidate minima closer than this are resolved by the
/// lexicographic order of the witness pair.
inline constexpr double kTieTolerance = 1e-12;

/// Exact discrete minimum of a^T C b with a and b drawn from the assignment set
/// of each party (magnitude-conserving when `constrained`).
///
/// The outer loop runs over b. For a fixed b the inner minimum over the full
/// spectrum is -s * sum_k |(Cb)_k|; over the constrained set it is a scan. The
/// witness is the lexicographically smallest (a, b) among all minimizers, so
/// the result does not depend on `threads`.
///
/// Throws Error(InfeasibleSpin) for an empty constrained set and
/// Error(NonFiniteMatrix) for NaN/inf entries.
BoundResult classical_bound(const CoefficientMatrix& c, SpinValue s, bool constrained,
                            unsigned threads = 1);

BoundsReport bounds_report(const CoefficientMatrix& c, SpinValue s, unsigned threads = 1);

}  // namespace spinhv
