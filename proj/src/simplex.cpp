#include "spinhv/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spinhv/error.hpp"

namespace spinhv::lp {
namespace {

// Columns: [0, n) structural, [n, n + m) artificial, n + m right-hand side.
// Row m holds reduced costs; its rhs entry is minus the objective value.
class Tableau {
public:
  Tableau(const Problem& p, std::vector<double>& signs)
      : m_(p.rows), n_(p.cols), width_(p.cols + p.rows + 1), t_((m_ + 1) * width_, 0.0),
        basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = p.b[i] < 0 ? -1.0 : 1.0;
      signs[i] = sign;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * p.at(i, j);
      at(i, n_ + i) = 1.0;
      at(i, rhs()) = sign * p.b[i];
      basis_[i] = n_ + i;
    }
  }

  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }
  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced costs r_j = c_j - c_B^T B^{-1} A_j for the given full cost vector.
  void price(const std::vector<double>& cost) {
    for (std::size_t j = 0; j < width_; ++j) {
      double r = j == rhs() ? 0.0 : cost[j];
      for (std::size_t i = 0; i < m_; ++i) r -= cost[basis_[i]] * at(i, j);
      at(m_, j) = r;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
    }
    basis_[row] = col;
  }

  // Bland's rule over columns [0, limit). Returns false at optimality, throws
  // nothing; `unbounded` is set when the entering column has no positive
  // entry.
  bool step(std::size_t limit, const Options& opt, bool& unbounded) {
    std::size_t enter = limit;
    for (std::size_t j = 0; j < limit; ++j) {
      if (at(m_, j) < -opt.pivot_tolerance) {
        enter = j;
        break;
      }
    }
    if (enter == limit) return false;

    std::size_t leave = m_;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, enter);
      if (a <= opt.pivot_tolerance) continue;
      const double ratio = at(i, rhs()) / a;
      if (ratio < best - 1e-14 ||
          (std::abs(ratio - best) <= 1e-14 && leave < m_ && basis_[i] < basis_[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m_) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  // y_i = c_B^T B^{-1} e_i, read from the artificial columns (initially I).
  std::vector<double> duals(const std::vector<double>& cost) const {
    std::vector<double> y(m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t i = 0; i < m_; ++i) y[k] += cost[basis_[i]] * at(i, n_ + k);
    return y;
  }

private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

void validate(const Problem& p) {
  if (p.a.size() != p.rows * p.cols || p.b.size() != p.rows || p.c.size() != p.cols) {
    throw Error(ErrorCode::LpNumericalFailure, "LP dimensions are inconsistent");
  }
  for (double v : p.a)
    if (!std::isfinite(v)) throw Error(ErrorCode::LpNumericalFailure, "LP matrix has non-finite entries");
  for (double v : p.b)
    if (!std::isfinite(v)) throw Error(ErrorCode::LpNumericalFailure, "LP rhs has non-finite entries");
}

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
  validate(problem);
  const std::size_t m = problem.rows;
  const std::size_t n = problem.cols;
  std::vector<double> signs(m, 1.0);
  Tableau t(problem, signs);
  Solution sol;

  auto run = [&](std::size_t limit) {
    bool unbounded = false;
    while (t.step(limit, options, unbounded)) {
      if (++sol.iterations > options.max_iterations) {
        throw Error(ErrorCode::LpNumericalFailure,
                    "simplex exceeded " + std::to_string(options.max_iterations) + " iterations");
      }
    }
    return unbounded;
  };

  // Phase one: minimize the sum of artificials.
  std::vector<double> phase1(n + m, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1.0;
  t.price(phase1);
  run(n);  // bounded below by zero
  sol.infeasibility = -t.at(m, t.rhs());

  if (sol.infeasibility > options.feasibility_tolerance) {
    sol.status = Status::Infeasible;
    sol.y = t.duals(phase1);
    for (std::size_t i = 0; i < m; ++i) sol.y[i] *= signs[i];
    return sol;
  }

  // Drive zero-level artificials out of the basis where a structural pivot
  // exists; rows without one are redundant and stay inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.at(i, j)) > options.pivot_tolerance) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase two on the structural columns only.
  std::vector<double> phase2(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.c[j];
  t.price(phase2);
  if (run(n)) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < n) sol.x[t.basis()[i]] = t.at(i, t.rhs());
  sol.objective = -t.at(m, t.rhs());
  sol.y = t.duals(phase2);
  for (std::size_t i = 0; i < m; ++i) sol.y[i] *= signs[i];
  return sol;
}

}  // namespace spinhv::lp
