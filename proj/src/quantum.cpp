#include "spinhv/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "spinhv/error.hpp"

namespace spinhv {

using cd = std::complex<double>;

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kNormTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr double kImagTol = 1e-10;
constexpr double kGimbalTol = 1e-12;

void require_operator_spin(SpinValue s) {
  if (s.doubled < 1 || s.doubled > kMaxOperatorSpinDoubled) {
    throw Error(ErrorCode::UnsupportedSpin,
                "operator construction supports 1 <= 2s <= " +
                    std::to_string(kMaxOperatorSpinDoubled) + ", got 2s=" +
                    std::to_string(s.doubled));
  }
}

void require_bipartite(const StateVector& state, SpinValue s) {
  require_operator_spin(s);
  const Eigen::Index n = s.multiplicity();
  if (state.dim() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a two-party state of dimension " + std::to_string(n * n) +
                    ", got " + std::to_string(state.dim()));
  }
}

void require_rotation(const CoefficientMatrix& c) {
  if (!c.is_rotation()) {
    throw Error(ErrorCode::NotARotation, "coefficient matrix is not a proper rotation");
  }
}

ComplexMatrix diagonal_phase(SpinValue s, double angle) {
  const Eigen::Index n = s.multiplicity();
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = (s.doubled - 2 * static_cast<int>(i)) / 2.0;
    d(i, i) = std::polar(1.0, m * angle);
  }
  return d;
}

ComplexMatrix hermitian_exponential(const HermitianOperator& op, double angle) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "eigendecomposition did not converge");
  }
  const auto& vals = es.eigenvalues();
  Eigen::VectorXcd phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) phases(i) = std::polar(1.0, vals(i) * angle);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator matrix is not square");
  }
  const double err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (m_.size() > 0 && err > kHermitianTol) {
    throw Error(ErrorCode::InvalidArgument,
                "operator is not Hermitian (max deviation " + std::to_string(err) + ")");
  }
}

StateVector::StateVector(ComplexVector amplitudes) : v_(std::move(amplitudes)) {
  if (v_.size() == 0 || std::abs(v_.norm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidArgument, "state vector is not normalized");
  }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

SpinOperators spin_operators(SpinValue s) {
  require_operator_spin(s);
  const Eigen::Index n = s.multiplicity();
  const double j = s.value();

  ComplexMatrix sz = ComplexMatrix::Zero(n, n);
  ComplexMatrix raise = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = (s.doubled - 2 * static_cast<int>(i)) / 2.0;
    sz(i, i) = m;
    // S+ |m> lands on index i-1 (m+1).
    if (i > 0) raise(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix lower = raise.adjoint();
  ComplexMatrix sx = (raise + lower) * 0.5;
  ComplexMatrix sy = (raise - lower) * cd(0.0, -0.5);
  return {HermitianOperator(std::move(sx)), HermitianOperator(std::move(sy)),
          HermitianOperator(std::move(sz))};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianOperator bell_operator(const CoefficientMatrix& c, SpinValue s) {
  if (!c.is_finite()) throw Error(ErrorCode::NonFiniteMatrix, "coefficient matrix has non-finite entries");
  const SpinOperators ops = spin_operators(s);
  const Eigen::Index n = s.multiplicity();
  ComplexMatrix h = ComplexMatrix::Zero(n * n, n * n);
  for (Axis k : kAxes) {
    for (Axis l : kAxes) {
      const double w = c(static_cast<int>(k), static_cast<int>(l));
      if (w != 0.0) h += w * kron(ops[k].matrix(), ops[l].matrix());
    }
  }
  // Remove rounding-level asymmetry from the complex products.
  h = (h + h.adjoint()).eval() * 0.5;
  return HermitianOperator(std::move(h));
}

QuantumBound quantum_bound(const CoefficientMatrix& c, SpinValue s) {
  const HermitianOperator h = bell_operator(c, s);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "Bell operator eigendecomposition did not converge");
  }
  const double lambda = es.eigenvalues()(0);
  ComplexVector v = es.eigenvectors().col(0);
  v.normalize();
  const double residual = (h.matrix() * v - lambda * v).norm();
  if (residual > kResidualTol) {
    throw Error(ErrorCode::EigensolverFailure,
                "eigenpair residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return {lambda, StateVector(std::move(v))};
}

StateVector singlet_state(SpinValue s) {
  require_operator_spin(s);
  const Eigen::Index n = s.multiplicity();
  ComplexVector v = ComplexVector::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  // Index i holds m = s - i, so s - m = i and -m sits at n - 1 - i.
  for (Eigen::Index i = 0; i < n; ++i) v(i * n + (n - 1 - i)) = (i % 2 == 0 ? amp : -amp);
  return StateVector::normalized(std::move(v));
}

EulerAngles euler_from_rotation(const CoefficientMatrix& c) {
  require_rotation(c);
  // c = Rz(xi) Ry(phi) Rz(theta) in the standard active convention.
  const double czz = c(2, 2);
  if (std::abs(czz) >= 1.0 - kGimbalTol) {
    if (czz > 0) return {std::atan2(c(1, 0), c(0, 0)), 0.0, 0.0};
    return {std::atan2(c(1, 0), c(1, 1)), std::numbers::pi, 0.0};
  }
  EulerAngles a;
  a.phi = std::atan2(std::hypot(c(0, 2), c(1, 2)), czz);
  a.xi = std::atan2(c(1, 2), c(0, 2));
  a.theta = std::atan2(c(2, 1), -c(2, 0));
  return a;
}

CoefficientMatrix rotation_from_euler(const EulerAngles& angles) {
  auto rz = [](double t) {
    return Matrix3{{{std::cos(t), -std::sin(t), 0}, {std::sin(t), std::cos(t), 0}, {0, 0, 1}}};
  };
  auto ry = [](double t) {
    return Matrix3{{{std::cos(t), 0, std::sin(t)}, {0, 1, 0}, {-std::sin(t), 0, std::cos(t)}}};
  };
  auto mul = [](const Matrix3& a, const Matrix3& b) {
    Matrix3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  return CoefficientMatrix(mul(mul(rz(angles.xi), ry(angles.phi)), rz(angles.theta)));
}

ComplexMatrix rotation_unitary(SpinValue s, const EulerAngles& angles) {
  const SpinOperators ops = spin_operators(s);
  ComplexMatrix u = diagonal_phase(s, angles.theta) * hermitian_exponential(ops.y, angles.phi) *
                    diagonal_phase(s, angles.xi);
  const Eigen::Index n = s.multiplicity();
  const double err = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
  if (err > kUnitaryTol) {
    throw Error(ErrorCode::EigensolverFailure,
                "rotation unitary deviates from unitarity by " + std::to_string(err));
  }
  return u;
}

StateVector rotated_singlet(const CoefficientMatrix& c, SpinValue s) {
  const EulerAngles angles = euler_from_rotation(c);
  const ComplexMatrix u = rotation_unitary(s, angles);
  const Eigen::Index n = s.multiplicity();
  const ComplexVector psi = singlet_state(s).amplitudes();
  // (I (x) U) on a row-major n x n amplitude array is M -> M U^T.
  const ComplexMatrix m = psi.reshaped<Eigen::RowMajor>(n, n);
  const ComplexMatrix rotated = m * u.transpose();
  return StateVector::normalized(rotated.reshaped<Eigen::RowMajor>());
}

double expectation(const StateVector& state, const HermitianOperator& op) {
  if (state.dim() != op.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state dimension " + std::to_string(state.dim()) + " vs operator dimension " +
                    std::to_string(op.dim()));
  }
  const cd value = state.amplitudes().dot(op.matrix() * state.amplitudes());
  if (std::abs(value.imag()) > kImagTol) {
    throw Error(ErrorCode::EigensolverFailure,
                "expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

Matrix3 correlation_matrix(const StateVector& state, SpinValue s) {
  require_bipartite(state, s);
  const SpinOperators ops = spin_operators(s);
  Matrix3 out{};
  for (Axis k : kAxes) {
    for (Axis l : kAxes) {
      const HermitianOperator kl(kron(ops[k].matrix(), ops[l].matrix()));
      out[static_cast<int>(k)][static_cast<int>(l)] = expectation(state, kl);
    }
  }
  return out;
}

std::vector<double> schmidt_coefficients(const StateVector& state, SpinValue s) {
  require_bipartite(state, s);
  const Eigen::Index n = s.multiplicity();
  const ComplexMatrix m = state.amplitudes().reshaped<Eigen::RowMajor>(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double projection_probability(const StateVector& state, Axis axis, SpinValue value) {
  const auto d = static_cast<int>(state.dim()) - 1;
  const SpinValue s = SpinValue::from_doubled(d);
  require_operator_spin(s);
  if (!s.admits_projection(value)) {
    throw Error(ErrorCode::ValueNotInSpectrum,
                to_string(value) + " is not an eigenvalue of a spin-" + to_string(s) + " component");
  }
  const SpinOperators ops = spin_operators(s);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ops[axis].matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "spin component eigendecomposition failed");
  }
  Eigen::Index idx = 0;
  const auto& vals = es.eigenvalues();
  for (Eigen::Index i = 1; i < vals.size(); ++i)
    if (std::abs(vals(i) - value.value()) < std::abs(vals(idx) - value.value())) idx = i;
  if (std::abs(vals(idx) - value.value()) > 1e-9) {
    throw Error(ErrorCode::ValueNotInSpectrum, "eigenvalue " + to_string(value) + " not found");
  }

  ComplexVector e = es.eigenvectors().col(idx);
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (std::abs(e(i)) > 1e-12) {
      e *= std::conj(e(i)) / std::abs(e(i));
      break;
    }
  }
  return std::norm(e.dot(state.amplitudes()));
}

StateVector basis_state(SpinValue s, SpinValue m) {
  require_operator_spin(s);
  if (!s.admits_projection(m)) {
    throw Error(ErrorCode::ValueNotInSpectrum,
                to_string(m) + " is not an eigenvalue of a spin-" + to_string(s) + " component");
  }
  ComplexVector v = ComplexVector::Zero(s.multiplicity());
  v((s.doubled - m.doubled) / 2) = 1.0;
  return StateVector(std::move(v));
}

}  // namespace spinhv
