/*
 * spinhv C API.
 *
 * Every spin argument is the doubled integer 2s. Coefficient matrices and
 * correlation points are nine doubles, row-major, x/y/z ordering. Assignments
 * are three doubled integers.
 *
 * Functions return SPINHV_OK or an error status; the message for the most
 * recent failure on the calling thread is available from
 * spinhv_last_error_message(). Handles are opaque and must be released with
 * the matching *_destroy function.
 */
#ifndef SPINHV_SPINHV_H
#define SPINHV_SPINHV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPINHV_BUILDING_LIBRARY)
#    define SPINHV_API __declspec(dllexport)
#  else
#    define SPINHV_API __declspec(dllimport)
#  endif
#else
#  define SPINHV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinhv_status {
  SPINHV_OK = 0,
  SPINHV_ERR_INVALID_ARGUMENT = 1,
  SPINHV_ERR_INFEASIBLE_SPIN = 2,
  SPINHV_ERR_NON_FINITE_MATRIX = 3,
  SPINHV_ERR_UNSUPPORTED_SPIN = 4,
  SPINHV_ERR_NOT_A_ROTATION = 5,
  SPINHV_ERR_EIGENSOLVER_FAILURE = 6,
  SPINHV_ERR_DIMENSION_MISMATCH = 7,
  SPINHV_ERR_VALUE_NOT_IN_SPECTRUM = 8,
  SPINHV_ERR_LP_NUMERICAL_FAILURE = 9,
  SPINHV_ERR_INTERNAL = 10
} spinhv_status;

typedef enum spinhv_axis { SPINHV_AXIS_X = 0, SPINHV_AXIS_Y = 1, SPINHV_AXIS_Z = 2 } spinhv_axis;

typedef struct spinhv_assignment_list spinhv_assignment_list;
typedef struct spinhv_state spinhv_state;
typedef struct spinhv_membership spinhv_membership;

SPINHV_API const char* spinhv_version(void);
SPINHV_API const char* spinhv_status_name(spinhv_status status);
SPINHV_API const char* spinhv_last_error_message(void);

/* ---- number theory ---------------------------------------------------- */

SPINHV_API int spinhv_is_sum_of_three_squares(uint64_t n);
SPINHV_API spinhv_status spinhv_magnitude_feasible(int spin_doubled, int* out_feasible);
/* Writes up to `capacity` infeasible 2s values (ascending) and the total count. */
SPINHV_API spinhv_status spinhv_infeasible_spins_up_to(int max_doubled, int* out_doubled,
                                                       size_t capacity, size_t* out_count);

/* ---- assignments ------------------------------------------------------ */

SPINHV_API spinhv_status spinhv_feasible_by_enumeration(int spin_doubled, int* out_feasible);
SPINHV_API spinhv_status spinhv_assignments_create(int spin_doubled, int constrained,
                                                   spinhv_assignment_list** out);
SPINHV_API size_t spinhv_assignments_size(const spinhv_assignment_list* list);
SPINHV_API spinhv_status spinhv_assignments_get(const spinhv_assignment_list* list, size_t index,
                                                int out_doubled[3]);
SPINHV_API void spinhv_assignments_destroy(spinhv_assignment_list* list);
/* Histogram of 4(s_x^2+s_y^2+s_z^2) over all assignments, ascending keys. */
SPINHV_API spinhv_status spinhv_magnitude_classes(int spin_doubled, int64_t* out_keys,
                                                  uint64_t* out_counts, size_t capacity,
                                                  size_t* out_count);

/* ---- classical bounds ------------------------------------------------- */

typedef struct spinhv_bound {
  double value;
  int witness_a[3];
  int witness_b[3];
} spinhv_bound;

/* Fills `out` from one of the built-in matrices: example1, example2,
 * example3, z45-rotation (alias eq9-rotation), identity. */
SPINHV_API spinhv_status spinhv_named_matrix(const char* name, double out[9]);
SPINHV_API int spinhv_matrix_is_rotation(const double c[9]);
/* SPINHV_ERR_INFEASIBLE_SPIN when `constrained` and no conserving assignment exists. */
SPINHV_API spinhv_status spinhv_classical_bound(const double c[9], int spin_doubled,
                                                int constrained, unsigned threads,
                                                spinhv_bound* out);

/* ---- quantum ---------------------------------------------------------- */

/* Lowest Bell-operator eigenvalue and its eigenvector (bipartite state). */
SPINHV_API spinhv_status spinhv_quantum_bound(const double c[9], int spin_doubled,
                                              double* out_value, spinhv_state** out_state);
SPINHV_API spinhv_status spinhv_singlet_state(int spin_doubled, spinhv_state** out);
SPINHV_API spinhv_status spinhv_rotated_singlet(const double c[9], int spin_doubled,
                                                spinhv_state** out);
/* |s, m> in the S_z basis. */
SPINHV_API spinhv_status spinhv_basis_state(int spin_doubled, int m_doubled, spinhv_state** out);
/* Normalizes the given amplitudes. */
SPINHV_API spinhv_status spinhv_state_create(const double* re, const double* im, size_t dim,
                                             spinhv_state** out);
SPINHV_API size_t spinhv_state_dim(const spinhv_state* state);
SPINHV_API spinhv_status spinhv_state_amplitude(const spinhv_state* state, size_t index,
                                                double* out_re, double* out_im);
SPINHV_API void spinhv_state_destroy(spinhv_state* state);

SPINHV_API spinhv_status spinhv_bell_expectation(const spinhv_state* state, const double c[9],
                                                 int spin_doubled, double* out);
/* <S_k (x) S_l>, row-major. */
SPINHV_API spinhv_status spinhv_state_correlations(const spinhv_state* state, int spin_doubled,
                                                   double out[9]);
/* Descending; writes min(capacity, 2s+1) values, total in out_count. */
SPINHV_API spinhv_status spinhv_schmidt_coefficients(const spinhv_state* state, int spin_doubled,
                                                     double* out, size_t capacity,
                                                     size_t* out_count);
SPINHV_API spinhv_status spinhv_projection_probability(const spinhv_state* state,
                                                       spinhv_axis axis, int value_doubled,
                                                       double* out);
/* z-y-z angles {theta, phi, xi}. */
SPINHV_API spinhv_status spinhv_euler_from_rotation(const double c[9], double out_angles[3]);

/* ---- polytope --------------------------------------------------------- */

SPINHV_API spinhv_status spinhv_vertex_count(int spin_doubled, int constrained,
                                             size_t* out_pairs, size_t* out_distinct);
/* tolerance <= 0 selects the default 1e-8. */
SPINHV_API spinhv_status spinhv_membership_test(const double point[9], int spin_doubled,
                                                int constrained, double tolerance,
                                                spinhv_membership** out);
SPINHV_API int spinhv_membership_inside(const spinhv_membership* m);
SPINHV_API double spinhv_membership_residual(const spinhv_membership* m);
SPINHV_API size_t spinhv_membership_weight_count(const spinhv_membership* m);
SPINHV_API spinhv_status spinhv_membership_weight(const spinhv_membership* m, size_t index,
                                                  double* out_weight, int out_a[3], int out_b[3]);
/* Only for outside results: f(v) >= bound for all vertices, f(point) < bound. */
SPINHV_API spinhv_status spinhv_membership_separator(const spinhv_membership* m,
                                                     double out_functional[9],
                                                     double* out_bound);
SPINHV_API void spinhv_membership_destroy(spinhv_membership* m);

typedef struct spinhv_inclusion {
  size_t constrained_vertices;
  size_t unconstrained_vertices;
  int constrained_within_unconstrained;
  int strict;
  /* Valid when strict != 0. */
  int witness_a[3];
  int witness_b[3];
  double witness_functional[9];
  double witness_bound;
  size_t lp_solves;
} spinhv_inclusion;

SPINHV_API spinhv_status spinhv_inclusion_check(int spin_doubled, double tolerance,
                                                spinhv_inclusion* out);

#ifdef __cplusplus
}
#endif

#endif /* SPINHV_SPINHV_H */
