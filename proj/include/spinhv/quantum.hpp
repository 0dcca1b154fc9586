#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinhv/bounds.hpp"
#include "spinhv/matrix3.hpp"
#include "spinhv/spin_value.hpp"

namespace spinhv {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest supported 2s for operator construction. Bipartite operators then
/// stay at or below 441 x 441.
inline constexpr int kMaxOperatorSpinDoubled = 20;

/// Dense complex matrix checked to be Hermitian within 1e-12 at construction.
class HermitianOperator {
public:
  explicit HermitianOperator(ComplexMatrix m);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

private:
  ComplexMatrix m_;
};

/// Unit-norm amplitude vector. Single-party states are indexed m = s .. -s;
/// bipartite states by (m_A, m_B) with A the slow index.
class StateVector {
public:
  /// Throws Error(InvalidArgument) unless |norm - 1| <= 1e-12.
  explicit StateVector(ComplexVector amplitudes);

  /// Rescales to unit norm; rejects the zero vector.
  static StateVector normalized(ComplexVector amplitudes);

  Eigen::Index dim() const noexcept { return v_.size(); }
  const ComplexVector& amplitudes() const noexcept { return v_; }

private:
  ComplexVector v_;
};

/// z-y-z Euler angles. The unitary is exp(i S_z theta) exp(i S_y phi)
/// exp(i S_z xi).
struct EulerAngles {
  double theta = 0.0;
  double phi = 0.0;
  double xi = 0.0;
};

struct SpinOperators {
  HermitianOperator x;
  HermitianOperator y;
  HermitianOperator z;

  const HermitianOperator& operator[](Axis a) const noexcept {
    return a == Axis::x ? x : (a == Axis::y ? y : z);
  }
};

struct QuantumBound {
  double value;
  StateVector state;
};

/// S_x, S_y, S_z in the S_z eigenbasis ordered m = s down to -s, built from
/// the ladder elements sqrt(s(s+1) - m(m+1)).
/// Throws Error(UnsupportedSpin) outside 1 <= 2s <= 20.
SpinOperators spin_operators(SpinValue s);

/// A (x) B with A as the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sum_kl c_kl S_k (x) S_l on the (2s+1)^2 dimensional two-party space.
HermitianOperator bell_operator(const CoefficientMatrix& c, SpinValue s);

/// Lowest eigenvalue of the Bell operator with its eigenvector.
/// Throws Error(EigensolverFailure) if ||Hv - lambda v|| > 1e-9.
QuantumBound quantum_bound(const CoefficientMatrix& c, SpinValue s);

/// (2s+1)^{-1/2} sum_m (-1)^{s-m} |m> (x) |-m>.
StateVector singlet_state(SpinValue s);

/// Angles whose unitary U satisfies U S_j U^dagger = sum_k c_jk S_k.
/// When |c_zz| >= 1 - 1e-12 the decomposition is degenerate; then phi is 0 or
/// pi, xi = 0 and theta carries the whole z rotation.
/// Throws Error(NotARotation) unless c.is_rotation().
EulerAngles euler_from_rotation(const CoefficientMatrix& c);

/// The rotation matrix represented by `angles` under the same convention, so
/// that euler_from_rotation(rotation_from_euler(a)) recovers an equivalent
/// triple.
CoefficientMatrix rotation_from_euler(const EulerAngles& angles);

/// exp(i S_z theta) exp(i S_y phi) exp(i S_z xi). exp(i S_y phi) goes through
/// the eigendecomposition of S_y.
/// Throws Error(EigensolverFailure) if ||U^dagger U - I|| > 1e-10.
ComplexMatrix rotation_unitary(SpinValue s, const EulerAngles& angles);

/// (I (x) U) applied to the singlet, U built from `c`. Its Bell expectation
/// is -s(s+1).
StateVector rotated_singlet(const CoefficientMatrix& c, SpinValue s);

/// <psi|op|psi>. Throws Error(DimensionMismatch).
double expectation(const StateVector& state, const HermitianOperator& op);

/// Two-party correlators <S_k (x) S_l> of a bipartite state.
Matrix3 correlation_matrix(const StateVector& state, SpinValue s);

/// Singular values of the (2s+1) x (2s+1) amplitude matrix, descending.
std::vector<double> schmidt_coefficients(const StateVector& state, SpinValue s);

/// |<e|psi>|^2 where e is the eigenvector of S_axis with eigenvalue `value`;
/// s is read off the state dimension.
/// Throws Error(ValueNotInSpectrum) when `value` is not one of s, ..., -s.
double projection_probability(const StateVector& state, Axis axis, SpinValue value);

/// |s, m> in the S_z basis.
StateVector basis_state(SpinValue s, SpinValue m);

}  // namespace spinhv
