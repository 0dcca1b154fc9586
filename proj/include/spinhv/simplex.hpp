#pragma once

#include <cstddef>
#include <vector>

namespace spinhv::lp {

/// min c^T x  subject to  A x = b,  x >= 0.  A is dense row-major m x n.
struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> x;
  /// Optimal: dual multipliers y with A^T y <= c.
  /// Infeasible: Farkas certificate with A^T y <= 0 and b^T y > 0.
  std::vector<double> y;
  double objective = 0.0;
  /// Phase-one optimum; zero (to tolerance) exactly when the system is feasible.
  double infeasibility = 0.0;
  std::size_t iterations = 0;
};

struct Options {
  double pivot_tolerance = 1e-11;
  /// Phase-one objective at or below this counts as feasible.
  double feasibility_tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
};

/// Dense two-phase tableau simplex with Bland's rule. Throws
/// Error(LpNumericalFailure) on malformed input or when the iteration limit is
/// reached.
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace spinhv::lp
