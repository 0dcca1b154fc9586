#include "spinhv/spinhv.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "spinhv/assignments.hpp"
#include "spinhv/bounds.hpp"
#include "spinhv/catalog.hpp"
#include "spinhv/error.hpp"
#include "spinhv/number_theory.hpp"
#include "spinhv/polytope.hpp"
#include "spinhv/quantum.hpp"

struct spinhv_assignment_list {
  std::vector<spinhv::Assignment> items;
};

struct spinhv_state {
  spinhv::StateVector state;
};

struct spinhv_membership {
  spinhv::MembershipResult result;
};

namespace {

thread_local std::string g_last_error;

spinhv_status map_code(spinhv::ErrorCode code) {
  using spinhv::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SPINHV_ERR_INVALID_ARGUMENT;
    case ErrorCode::InfeasibleSpin: return SPINHV_ERR_INFEASIBLE_SPIN;
    case ErrorCode::NonFiniteMatrix: return SPINHV_ERR_NON_FINITE_MATRIX;
    case ErrorCode::UnsupportedSpin: return SPINHV_ERR_UNSUPPORTED_SPIN;
    case ErrorCode::NotARotation: return SPINHV_ERR_NOT_A_ROTATION;
    case ErrorCode::EigensolverFailure: return SPINHV_ERR_EIGENSOLVER_FAILURE;
    case ErrorCode::DimensionMismatch: return SPINHV_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ValueNotInSpectrum: return SPINHV_ERR_VALUE_NOT_IN_SPECTRUM;
    case ErrorCode::LpNumericalFailure: return SPINHV_ERR_LP_NUMERICAL_FAILURE;
  }
  return SPINHV_ERR_INTERNAL;
}

spinhv_status fail(spinhv_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
spinhv_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return SPINHV_OK;
  } catch (const spinhv::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPINHV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SPINHV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPINHV_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw spinhv::Error(spinhv::ErrorCode::InvalidArgument, what);
}

spinhv::CoefficientMatrix matrix_from(const double* c) {
  require(c != nullptr, "coefficient matrix pointer is null");
  return spinhv::CoefficientMatrix::from_row_major(std::span<const double, 9>(c, 9));
}

spinhv::SpinValue spin(int doubled) { return spinhv::SpinValue::from_doubled(doubled); }

void copy_assignment(const spinhv::Assignment& a, int out[3]) {
  const auto d = a.doubled();
  std::copy(d.begin(), d.end(), out);
}

void copy_matrix(const spinhv::Matrix3& m, double out[9]) {
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) out[3 * k + l] = m[k][l];
}

spinhv::Axis axis_from(spinhv_axis a) {
  switch (a) {
    case SPINHV_AXIS_X: return spinhv::Axis::x;
    case SPINHV_AXIS_Y: return spinhv::Axis::y;
    case SPINHV_AXIS_Z: return spinhv::Axis::z;
  }
  throw spinhv::Error(spinhv::ErrorCode::InvalidArgument, "unknown axis");
}

}  // namespace

extern "C" {

const char* spinhv_version(void) { return "0.1.0"; }

const char* spinhv_status_name(spinhv_status status) {
  switch (status) {
    case SPINHV_OK: return "OK";
    case SPINHV_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SPINHV_ERR_INFEASIBLE_SPIN: return "InfeasibleSpin";
    case SPINHV_ERR_NON_FINITE_MATRIX: return "NonFiniteMatrix";
    case SPINHV_ERR_UNSUPPORTED_SPIN: return "UnsupportedSpin";
    case SPINHV_ERR_NOT_A_ROTATION: return "NotARotation";
    case SPINHV_ERR_EIGENSOLVER_FAILURE: return "EigensolverFailure";
    case SPINHV_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case SPINHV_ERR_VALUE_NOT_IN_SPECTRUM: return "ValueNotInSpectrum";
    case SPINHV_ERR_LP_NUMERICAL_FAILURE: return "LpNumericalFailure";
    case SPINHV_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* spinhv_last_error_message(void) { return g_last_error.c_str(); }

int spinhv_is_sum_of_three_squares(uint64_t n) { return spinhv::is_sum_of_three_squares(n) ? 1 : 0; }

spinhv_status spinhv_magnitude_feasible(int spin_doubled, int* out_feasible) {
  return guarded([&] {
    require(out_feasible != nullptr, "output pointer is null");
    *out_feasible = spinhv::magnitude_feasible(spin(spin_doubled)) ? 1 : 0;
  });
}

spinhv_status spinhv_infeasible_spins_up_to(int max_doubled, int* out_doubled, size_t capacity,
                                            size_t* out_count) {
  return guarded([&] {
    require(out_count != nullptr, "output pointer is null");
    require(capacity == 0 || out_doubled != nullptr, "output buffer is null");
    const auto list = spinhv::infeasible_spins_up_to(max_doubled);
    for (size_t i = 0; i < std::min(capacity, list.size()); ++i) out_doubled[i] = list[i].doubled;
    *out_count = list.size();
  });
}

spinhv_status spinhv_feasible_by_enumeration(int spin_doubled, int* out_feasible) {
  return guarded([&] {
    require(out_feasible != nullptr, "output pointer is null");
    *out_feasible = spinhv::feasible_by_enumeration(spin(spin_doubled)) ? 1 : 0;
  });
}

spinhv_status spinhv_assignments_create(int spin_doubled, int constrained,
                                        spinhv_assignment_list** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto s = spin(spin_doubled);
    auto items = constrained ? spinhv::enumerate_constrained(s) : spinhv::enumerate_unconstrained(s);
    *out = new spinhv_assignment_list{std::move(items)};
  });
}

size_t spinhv_assignments_size(const spinhv_assignment_list* list) {
  return list == nullptr ? 0 : list->items.size();
}

spinhv_status spinhv_assignments_get(const spinhv_assignment_list* list, size_t index,
                                     int out_doubled[3]) {
  return guarded([&] {
    require(list != nullptr && out_doubled != nullptr, "null argument");
    require(index < list->items.size(), "assignment index out of range");
    copy_assignment(list->items[index], out_doubled);
  });
}

void spinhv_assignments_destroy(spinhv_assignment_list* list) { delete list; }

spinhv_status spinhv_magnitude_classes(int spin_doubled, int64_t* out_keys, uint64_t* out_counts,
                                       size_t capacity, size_t* out_count) {
  return guarded([&] {
    require(out_count != nullptr, "output pointer is null");
    require(capacity == 0 || (out_keys != nullptr && out_counts != nullptr), "output buffer is null");
    const auto hist = spinhv::squared_magnitude_classes(spin(spin_doubled));
    size_t i = 0;
    for (const auto& [key, count] : hist) {
      if (i < capacity) {
        out_keys[i] = key;
        out_counts[i] = count;
      }
      ++i;
    }
    *out_count = hist.size();
  });
}

spinhv_status spinhv_named_matrix(const char* name, double out[9]) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto m = spinhv::catalog::named(name);
    if (!m) throw spinhv::Error(spinhv::ErrorCode::InvalidArgument, std::string("unknown matrix name: ") + name);
    copy_matrix(m->entries(), out);
  });
}

int spinhv_matrix_is_rotation(const double c[9]) {
  if (c == nullptr) return 0;
  return matrix_from(c).is_rotation() ? 1 : 0;
}

spinhv_status spinhv_classical_bound(const double c[9], int spin_doubled, int constrained,
                                     unsigned threads, spinhv_bound* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto r = spinhv::classical_bound(matrix_from(c), spin(spin_doubled), constrained != 0,
                                           threads == 0 ? 1 : threads);
    out->value = r.value;
    copy_assignment(r.witness_a, out->witness_a);
    copy_assignment(r.witness_b, out->witness_b);
  });
}

spinhv_status spinhv_quantum_bound(const double c[9], int spin_doubled, double* out_value,
                                   spinhv_state** out_state) {
  return guarded([&] {
    require(out_value != nullptr, "output pointer is null");
    auto qb = spinhv::quantum_bound(matrix_from(c), spin(spin_doubled));
    *out_value = qb.value;
    if (out_state != nullptr) *out_state = new spinhv_state{std::move(qb.state)};
  });
}

spinhv_status spinhv_singlet_state(int spin_doubled, spinhv_state** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new spinhv_state{spinhv::singlet_state(spin(spin_doubled))};
  });
}

spinhv_status spinhv_rotated_singlet(const double c[9], int spin_doubled, spinhv_state** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new spinhv_state{spinhv::rotated_singlet(matrix_from(c), spin(spin_doubled))};
  });
}

spinhv_status spinhv_basis_state(int spin_doubled, int m_doubled, spinhv_state** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new spinhv_state{spinhv::basis_state(spin(spin_doubled), spin(m_doubled))};
  });
}

spinhv_status spinhv_state_create(const double* re, const double* im, size_t dim,
                                  spinhv_state** out) {
  return guarded([&] {
    require(out != nullptr && re != nullptr && dim > 0, "invalid state buffer");
    spinhv::ComplexVector v(static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = {re[i], im ? im[i] : 0.0};
    *out = new spinhv_state{spinhv::StateVector::normalized(std::move(v))};
  });
}

size_t spinhv_state_dim(const spinhv_state* state) {
  return state == nullptr ? 0 : static_cast<size_t>(state->state.dim());
}

spinhv_status spinhv_state_amplitude(const spinhv_state* state, size_t index, double* out_re,
                                     double* out_im) {
  return guarded([&] {
    require(state != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
    require(index < static_cast<size_t>(state->state.dim()), "amplitude index out of range");
    const auto a = state->state.amplitudes()(static_cast<Eigen::Index>(index));
    *out_re = a.real();
    *out_im = a.imag();
  });
}

void spinhv_state_destroy(spinhv_state* state) { delete state; }

spinhv_status spinhv_bell_expectation(const spinhv_state* state, const double c[9],
                                      int spin_doubled, double* out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    *out = spinhv::expectation(state->state, spinhv::bell_operator(matrix_from(c), spin(spin_doubled)));
  });
}

spinhv_status spinhv_state_correlations(const spinhv_state* state, int spin_doubled,
                                        double out[9]) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    copy_matrix(spinhv::correlation_matrix(state->state, spin(spin_doubled)), out);
  });
}

spinhv_status spinhv_schmidt_coefficients(const spinhv_state* state, int spin_doubled,
                                          double* out, size_t capacity, size_t* out_count) {
  return guarded([&] {
    require(state != nullptr && out_count != nullptr, "null argument");
    require(capacity == 0 || out != nullptr, "output buffer is null");
    const auto sv = spinhv::schmidt_coefficients(state->state, spin(spin_doubled));
    std::copy_n(sv.begin(), std::min(capacity, sv.size()), out);
    *out_count = sv.size();
  });
}

spinhv_status spinhv_projection_probability(const spinhv_state* state, spinhv_axis axis,
                                            int value_doubled, double* out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    *out = spinhv::projection_probability(state->state, axis_from(axis), spin(value_doubled));
  });
}

spinhv_status spinhv_euler_from_rotation(const double c[9], double out_angles[3]) {
  return guarded([&] {
    require(out_angles != nullptr, "output pointer is null");
    const auto a = spinhv::euler_from_rotation(matrix_from(c));
    out_angles[0] = a.theta;
    out_angles[1] = a.phi;
    out_angles[2] = a.xi;
  });
}

spinhv_status spinhv_vertex_count(int spin_doubled, int constrained, size_t* out_pairs,
                                  size_t* out_distinct) {
  return guarded([&] {
    require(out_pairs != nullptr && out_distinct != nullptr, "null argument");
    const auto vs = spinhv::vertex_correlations(spin(spin_doubled), constrained != 0);
    *out_pairs = vs.pair_count;
    *out_distinct = vs.vertices.size();
  });
}

spinhv_status spinhv_membership_test(const double point[9], int spin_doubled, int constrained,
                                     double tolerance, spinhv_membership** out) {
  return guarded([&] {
    require(point != nullptr && out != nullptr, "null argument");
    spinhv::CorrelationPoint p;
    for (int r = 0; r < 9; ++r) p.c[r / 3][r % 3] = point[r];
    const double tol = tolerance > 0 ? tolerance : spinhv::kMembershipTolerance;
    *out = new spinhv_membership{spinhv::membership(p, spin(spin_doubled), constrained != 0, tol)};
  });
}

int spinhv_membership_inside(const spinhv_membership* m) {
  return m != nullptr && m->result.inside ? 1 : 0;
}

double spinhv_membership_residual(const spinhv_membership* m) {
  return m == nullptr ? 0.0 : m->result.certificate_residual;
}

size_t spinhv_membership_weight_count(const spinhv_membership* m) {
  return m == nullptr ? 0 : m->result.weights.size();
}

spinhv_status spinhv_membership_weight(const spinhv_membership* m, size_t index,
                                       double* out_weight, int out_a[3], int out_b[3]) {
  return guarded([&] {
    require(m != nullptr && out_weight != nullptr && out_a != nullptr && out_b != nullptr,
            "null argument");
    require(index < m->result.weights.size(), "weight index out of range");
    const auto& wv = m->result.weights[index];
    *out_weight = wv.weight;
    copy_assignment(wv.vertex.a, out_a);
    copy_assignment(wv.vertex.b, out_b);
  });
}

spinhv_status spinhv_membership_separator(const spinhv_membership* m, double out_functional[9],
                                          double* out_bound) {
  return guarded([&] {
    require(m != nullptr && out_functional != nullptr && out_bound != nullptr, "null argument");
    require(m->result.separator.has_value(), "point is inside; no separating functional");
    copy_matrix(m->result.separator->f, out_functional);
    *out_bound = m->result.separator->bound;
  });
}

void spinhv_membership_destroy(spinhv_membership* m) { delete m; }

spinhv_status spinhv_inclusion_check(int spin_doubled, double tolerance, spinhv_inclusion* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const double tol = tolerance > 0 ? tolerance : spinhv::kMembershipTolerance;
    const auto rep = spinhv::inclusion_check(spin(spin_doubled), tol);
    *out = spinhv_inclusion{};
    out->constrained_vertices = rep.constrained_vertices;
    out->unconstrained_vertices = rep.unconstrained_vertices;
    out->constrained_within_unconstrained = rep.constrained_within_unconstrained ? 1 : 0;
    out->strict = rep.strict ? 1 : 0;
    out->lp_solves = rep.lp_solves;
    if (rep.witness) {
      copy_assignment(rep.witness->a, out->witness_a);
      copy_assignment(rep.witness->b, out->witness_b);
    }
    if (rep.witness_separator) {
      copy_matrix(rep.witness_separator->f, out->witness_functional);
      out->witness_bound = rep.witness_separator->bound;
    }
  });
}

}  // extern "C"
