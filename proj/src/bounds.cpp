#include "spinhv/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "spinhv/error.hpp"

namespace spinhv {

CoefficientMatrix CoefficientMatrix::from_row_major(std::span<const double, 9> entries) {
  Matrix3 m{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) m[k][l] = entries[3 * k + l];
  return CoefficientMatrix(m);
}

CoefficientMatrix CoefficientMatrix::identity() {
  return CoefficientMatrix(Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

bool CoefficientMatrix::is_finite() const noexcept {
  for (const auto& row : c_)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

bool CoefficientMatrix::is_rotation(double tol) const noexcept {
  if (!is_finite()) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += c_[k][i] * c_[k][j];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  const double det = c_[0][0] * (c_[1][1] * c_[2][2] - c_[1][2] * c_[2][1]) -
                     c_[0][1] * (c_[1][0] * c_[2][2] - c_[1][2] * c_[2][0]) +
                     c_[0][2] * (c_[1][0] * c_[2][1] - c_[1][1] * c_[2][0]);
  return std::abs(det - 1.0) <= tol;
}

CoefficientMatrix CoefficientMatrix::scaled(double factor) const {
  Matrix3 m = c_;
  for (auto& row : m)
    for (double& v : row) v *= factor;
  return CoefficientMatrix(m);
}

CoefficientMatrix CoefficientMatrix::transposed() const {
  Matrix3 m{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) m[k][l] = c_[l][k];
  return CoefficientMatrix(m);
}

double CoefficientMatrix::bilinear(const std::array<double, 3>& a,
                                   const std::array<double, 3>& b) const noexcept {
  double sum = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) sum += a[k] * c_[k][l] * b[l];
  return sum;
}

namespace {

struct InnerMin {
  double value;
  Assignment a;
};

std::array<double, 3> apply(const CoefficientMatrix& c, const Assignment& b) {
  const auto v = b.values();
  std::array<double, 3> w{};
  for (int k = 0; k < 3; ++k) w[k] = c(k, 0) * v[0] + c(k, 1) * v[1] + c(k, 2) * v[2];
  return w;
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// min over the full spectrum, componentwise. A component whose weight is
// within the tie tolerance of zero takes -s, the smallest admissible value.
InnerMin unconstrained_inner(const std::array<double, 3>& w, SpinValue s) {
  std::array<int, 3> a{};
  double value = 0.0;
  for (int k = 0; k < 3; ++k) {
    a[k] = w[k] < -kTieTolerance ? s.doubled : -s.doubled;
    value -= s.value() * std::abs(w[k]);
  }
  return {value, Assignment::from_doubled(a[0], a[1], a[2])};
}

InnerMin scanned_inner(const std::array<double, 3>& w, const std::vector<Assignment>& set) {
  double best = dot(set.front().values(), w);
  for (const auto& a : set) best = std::min(best, dot(a.values(), w));
  for (const auto& a : set)
    if (dot(a.values(), w) <= best + kTieTolerance) return {best, a};
  return {best, set.front()};
}

void validate(const CoefficientMatrix& c, SpinValue s) {
  if (s.doubled < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "spin magnitude must be positive, got doubled=" + std::to_string(s.doubled));
  }
  if (!c.is_finite()) throw Error(ErrorCode::NonFiniteMatrix, "coefficient matrix has non-finite entries");
}

}  // namespace

BoundResult classical_bound(const CoefficientMatrix& c, SpinValue s, bool constrained,
                            unsigned threads) {
  validate(c, s);
  const std::vector<Assignment> set =
      constrained ? enumerate_constrained(s) : enumerate_unconstrained(s);
  if (set.empty()) {
    throw Error(ErrorCode::InfeasibleSpin,
                "no magnitude-conserving assignment exists for s=" + to_string(s));
  }

  std::vector<InnerMin> per_b(set.size(), InnerMin{0.0, set.front()});
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto w = apply(c, set[i]);
      per_b[i] = constrained ? scanned_inner(w, set) : unconstrained_inner(w, s);
    }
  };

  threads = std::clamp<unsigned>(threads, 1, 64);
  if (threads == 1 || set.size() < 2 * threads) {
    work(0, set.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (set.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < set.size(); begin += chunk)
      pool.emplace_back(work, begin, std::min(set.size(), begin + chunk));
  }

  // Merge: global minimum first, then the smallest (a, b) among near-ties.
  double best = per_b.front().value;
  for (const auto& m : per_b) best = std::min(best, m.value);

  const InnerMin* chosen = nullptr;
  std::size_t chosen_b = 0;
  for (std::size_t i = 0; i < per_b.size(); ++i) {
    if (per_b[i].value > best + kTieTolerance) continue;
    if (chosen == nullptr || per_b[i].a < chosen->a) {
      chosen = &per_b[i];
      chosen_b = i;
    }
  }
  return {best, chosen->a, set[chosen_b]};
}

BoundsReport bounds_report(const CoefficientMatrix& c, SpinValue s, unsigned threads) {
  BoundsReport report;
  report.spin = s;
  report.unconstrained = classical_bound(c, s, false, threads);
  try {
    report.constrained = classical_bound(c, s, true, threads);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfeasibleSpin) throw;
  }
  return report;
}

}  // namespace spinhv
