#include "spinhv/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "spinhv/error.hpp"
#include "spinhv/simplex.hpp"

namespace spinhv {
namespace {

struct KeyHash {
  std::size_t operator()(const std::array<int, 9>& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : k) h = (h ^ static_cast<std::size_t>(v + 1024)) * 1099511628211ULL;
    return h;
  }
};

std::array<int, 9> outer_key(const Assignment& a, const Assignment& b) {
  const auto x = a.doubled();
  const auto y = b.doubled();
  std::array<int, 9> key{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) key[3 * k + l] = x[k] * y[l];
  return key;
}

}  // namespace

CorrelationPoint CorrelationPoint::outer(const Assignment& a, const Assignment& b) {
  const auto x = a.values();
  const auto y = b.values();
  CorrelationPoint p;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) p.c[k][l] = x[k] * y[l];
  return p;
}

double SeparatingFunctional::evaluate(const CorrelationPoint& p) const noexcept {
  double sum = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) sum += f[k][l] * p.c[k][l];
  return sum;
}

VertexSet vertex_correlations(SpinValue s, bool constrained) {
  const std::vector<Assignment> set =
      constrained ? enumerate_constrained(s) : enumerate_unconstrained(s);
  if (set.empty()) {
    throw Error(ErrorCode::InfeasibleSpin,
                "no magnitude-conserving assignment exists for s=" + to_string(s));
  }
  if (set.size() * set.size() > kMaxVertexPairs) {
    throw Error(ErrorCode::UnsupportedSpin,
                "vertex enumeration for s=" + to_string(s) + " exceeds " +
                    std::to_string(kMaxVertexPairs) + " assignment pairs");
  }

  VertexSet out;
  out.spin = s;
  out.constrained = constrained;
  out.pair_count = set.size() * set.size();
  std::unordered_set<std::array<int, 9>, KeyHash> seen;
  for (const auto& a : set) {
    for (const auto& b : set) {
      auto key = outer_key(a, b);
      if (!seen.insert(key).second) continue;
      out.vertices.push_back({CorrelationPoint::outer(a, b), key, a, b});
    }
  }
  return out;
}

MembershipResult membership(const CorrelationPoint& point, const VertexSet& vs, double tolerance) {
  for (const auto& row : point.c)
    for (double v : row)
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "correlation point has non-finite entries");

  // Rows 0..8: sum_j w_j v_j = p. Row 9: sum_j w_j = 1.
  const std::size_t n = vs.vertices.size();
  lp::Problem prob;
  prob.rows = 10;
  prob.cols = n;
  prob.a.assign(prob.rows * n, 0.0);
  prob.b.assign(prob.rows, 0.0);
  prob.c.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = vs.vertices[j].point;
    for (int r = 0; r < 9; ++r) prob.at(r, j) = v.c[r / 3][r % 3];
    prob.at(9, j) = 1.0;
  }
  for (int r = 0; r < 9; ++r) prob.b[r] = point.c[r / 3][r % 3];
  prob.b[9] = 1.0;

  lp::Options opt;
  opt.feasibility_tolerance = tolerance * 0.1;
  const lp::Solution sol = lp::solve(prob, opt);

  MembershipResult res;
  if (sol.status == lp::Status::Optimal) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sol.x[j] > 1e-14) {
        res.weights.push_back({vs.vertices[j], sol.x[j]});
        total += sol.x[j];
      }
    }
    // Reconstruct and check every coordinate against the query.
    CorrelationPoint rebuilt;
    for (const auto& wv : res.weights)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) rebuilt.c[k][l] += wv.weight * wv.vertex.point.c[k][l];
    double worst = std::abs(total - 1.0);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(rebuilt.c[k][l] - point.c[k][l]));
    if (worst > tolerance) {
      throw Error(ErrorCode::LpNumericalFailure,
                  "convex weights reproduce the point only to " + std::to_string(worst));
    }
    res.inside = true;
    res.certificate_residual = worst;
    return res;
  }
  if (sol.status != lp::Status::Infeasible) {
    throw Error(ErrorCode::LpNumericalFailure, "membership LP returned an unexpected status");
  }

  // Farkas: y^T [v; 1] <= 0 for all vertices and y^T [p; 1] > 0. With
  // f = -y[0..8] and bound = y[9]: f(v) >= bound, f(p) < bound.
  double scale = 0.0;
  for (double v : sol.y) scale = std::max(scale, std::abs(v));
  if (!(scale > 0.0)) throw Error(ErrorCode::LpNumericalFailure, "empty infeasibility certificate");
  SeparatingFunctional sep;
  for (int r = 0; r < 9; ++r) sep.f[r / 3][r % 3] = -sol.y[r] / scale;
  sep.bound = sol.y[9] / scale;

  double min_vertex = std::numeric_limits<double>::infinity();
  for (const auto& v : vs.vertices) min_vertex = std::min(min_vertex, sep.evaluate(v.point));
  const double at_point = sep.evaluate(point);
  if (min_vertex < sep.bound - tolerance || !(at_point < sep.bound)) {
    throw Error(ErrorCode::LpNumericalFailure,
                "separating functional failed verification (vertex min " +
                    std::to_string(min_vertex) + ", point " + std::to_string(at_point) +
                    ", bound " + std::to_string(sep.bound) + ")");
  }
  res.inside = false;
  res.separator = sep;
  res.certificate_residual = sep.bound - at_point;
  return res;
}

MembershipResult membership(const CorrelationPoint& point, SpinValue s, bool constrained,
                            double tolerance) {
  return membership(point, vertex_correlations(s, constrained), tolerance);
}

InclusionReport inclusion_check(SpinValue s, double tolerance) {
  const VertexSet con = vertex_correlations(s, true);
  const VertexSet unc = vertex_correlations(s, false);

  InclusionReport rep;
  rep.spin = s;
  rep.constrained_vertices = con.vertices.size();
  rep.unconstrained_vertices = unc.vertices.size();

  std::set<std::array<int, 9>> unc_keys;
  for (const auto& v : unc.vertices) unc_keys.insert(v.key);
  std::set<std::array<int, 9>> con_keys;
  rep.constrained_within_unconstrained = true;
  for (const auto& v : con.vertices) {
    con_keys.insert(v.key);
    if (!unc_keys.contains(v.key)) rep.constrained_within_unconstrained = false;
  }

  for (const auto& v : unc.vertices) {
    if (con_keys.contains(v.key)) continue;
    ++rep.lp_solves;
    const MembershipResult m = membership(v.point, con, tolerance);
    if (!m.inside) {
      rep.strict = true;
      rep.witness = v;
      rep.witness_separator = m.separator;
      break;
    }
  }
  return rep;
}

}  // namespace spinhv
