#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "spinhv/assignments.hpp"
#include "spinhv/matrix3.hpp"
#include "spinhv/spin_value.hpp"

namespace spinhv {

/// The nine correlators <S_k^(A) S_l^(B)>, raw (unnormalized) coordinates.
struct CorrelationPoint {
  Matrix3 c{};

  static CorrelationPoint outer(const Assignment& a, const Assignment& b);
  double operator()(int k, int l) const { return c[k][l]; }
};

/// A deterministic-assignment vertex. `key` holds the exact products of the
/// doubled components (4 a_k b_l) and identifies the point.
struct Vertex {
  CorrelationPoint point;
  std::array<int, 9> key{};
  Assignment a;
  Assignment b;
};

struct VertexSet {
  SpinValue spin;
  bool constrained = false;
  /// Number of (a, b) pairs before deduplication.
  std::size_t pair_count = 0;
  /// Distinct points, in order of first appearance over (a, b) ascending.
  std::vector<Vertex> vertices;
};

/// Upper bound on (a, b) pairs accepted by vertex_correlations.
inline constexpr std::size_t kMaxVertexPairs = std::size_t{1} << 20;

/// a (x) b for every pair from the chosen assignment sets, exact dedup.
/// Throws Error(InfeasibleSpin) for an empty constrained set and
/// Error(UnsupportedSpin) above kMaxVertexPairs.
VertexSet vertex_correlations(SpinValue s, bool constrained);

/// f(p) = sum_kl f_kl p_kl. Every vertex satisfies f(v) >= bound.
struct SeparatingFunctional {
  Matrix3 f{};
  double bound = 0.0;

  double evaluate(const CorrelationPoint& p) const noexcept;
};

struct WeightedVertex {
  Vertex vertex;
  double weight = 0.0;
};

struct MembershipResult {
  bool inside = false;
  /// Non-zero convex weights when inside.
  std::vector<WeightedVertex> weights;
  /// Present when outside: the point evaluates strictly below `bound`.
  std::optional<SeparatingFunctional> separator;
  /// Largest per-coordinate reconstruction error (inside) or the margin
  /// bound - f(point) (outside).
  double certificate_residual = 0.0;
};

inline constexpr double kMembershipTolerance = 1e-8;

/// LP feasibility: is `point` a convex combination of the vertices within
/// `tolerance` per coordinate? The returned certificate is re-verified
/// against every vertex before returning.
/// Throws Error(LpNumericalFailure) when neither outcome can be certified.
MembershipResult membership(const CorrelationPoint& point, const VertexSet& vertices,
                            double tolerance = kMembershipTolerance);
MembershipResult membership(const CorrelationPoint& point, SpinValue s, bool constrained,
                            double tolerance = kMembershipTolerance);

struct InclusionReport {
  SpinValue spin;
  std::size_t constrained_vertices = 0;
  std::size_t unconstrained_vertices = 0;
  /// Every constrained vertex is also an unconstrained vertex.
  bool constrained_within_unconstrained = false;
  /// Some unconstrained vertex lies outside the constrained polytope.
  bool strict = false;
  std::optional<Vertex> witness;
  std::optional<SeparatingFunctional> witness_separator;
  /// Membership LPs solved while searching for the witness.
  std::size_t lp_solves = 0;
};

/// Checks LHV' within LHV structurally and looks for an unconstrained vertex
/// outside LHV'. Candidates are scanned in vertex order, skipping points that
/// are themselves constrained vertices; the first one found is the witness.
InclusionReport inclusion_check(SpinValue s, double tolerance = kMembershipTolerance);

}  // namespace spinhv
