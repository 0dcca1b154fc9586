#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "spinhv/spinhv.h"

namespace {

std::vector<double> named(const char* name) {
  std::vector<double> c(9);
  REQUIRE(spinhv_named_matrix(name, c.data()) == SPINHV_OK);
  return c;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(spinhv_version()) > 0);
  CHECK(std::string(spinhv_status_name(SPINHV_OK)) == "OK");
  CHECK(std::string(spinhv_status_name(SPINHV_ERR_INFEASIBLE_SPIN)) != "OK");
  CHECK(spinhv_status_name(static_cast<spinhv_status>(99)) != nullptr);
}

TEST_CASE("number theory through the C interface") {
  CHECK(spinhv_is_sum_of_three_squares(6) == 1);
  CHECK(spinhv_is_sum_of_three_squares(7) == 0);
  int feasible = -1;
  CHECK(spinhv_magnitude_feasible(2, &feasible) == SPINHV_OK);
  CHECK(feasible == 1);
  CHECK(spinhv_magnitude_feasible(24, &feasible) == SPINHV_OK);
  CHECK(feasible == 0);
  CHECK(spinhv_magnitude_feasible(0, &feasible) == SPINHV_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(spinhv_last_error_message()) > 0);
  CHECK(spinhv_magnitude_feasible(2, nullptr) == SPINHV_ERR_INVALID_ARGUMENT);

  int buf[4];
  std::size_t count = 0;
  CHECK(spinhv_infeasible_spins_up_to(40, buf, 4, &count) == SPINHV_OK);
  CHECK(count == 13);
  CHECK(buf[0] == 3);
}

TEST_CASE("assignment lists") {
  spinhv_assignment_list* list = nullptr;
  REQUIRE(spinhv_assignments_create(2, 1, &list) == SPINHV_OK);
  CHECK(spinhv_assignments_size(list) == 12);
  int a[3];
  CHECK(spinhv_assignments_get(list, 0, a) == SPINHV_OK);
  CHECK(a[0] == -2);
  CHECK(a[1] == -2);
  CHECK(a[2] == 0);
  CHECK(spinhv_assignments_get(list, 12, a) == SPINHV_ERR_INVALID_ARGUMENT);
  spinhv_assignments_destroy(list);
  spinhv_assignments_destroy(nullptr);

  int feasible = -1;
  CHECK(spinhv_feasible_by_enumeration(3, &feasible) == SPINHV_OK);
  CHECK(feasible == 0);

  std::int64_t keys[8];
  std::uint64_t counts[8];
  std::size_t n = 0;
  CHECK(spinhv_magnitude_classes(3, keys, counts, 8, &n) == SPINHV_OK);
  CHECK(n == 4);
}

TEST_CASE("bounds through the C interface") {
  const auto c = named("example1");
  spinhv_bound b{};
  CHECK(spinhv_classical_bound(c.data(), 2, 1, 2, &b) == SPINHV_OK);
  CHECK(b.value == doctest::Approx(-2.0));
  CHECK(spinhv_classical_bound(c.data(), 2, 0, 1, &b) == SPINHV_OK);
  CHECK(b.value == doctest::Approx(-3.0));
  CHECK(spinhv_classical_bound(c.data(), 3, 1, 1, &b) == SPINHV_ERR_INFEASIBLE_SPIN);

  std::vector<double> bad = c;
  bad[4] = std::nan("");
  CHECK(spinhv_classical_bound(bad.data(), 2, 0, 1, &b) == SPINHV_ERR_NON_FINITE_MATRIX);

  double dummy[9];
  CHECK(spinhv_named_matrix("nope", dummy) == SPINHV_ERR_INVALID_ARGUMENT);
  CHECK(spinhv_matrix_is_rotation(named("z45-rotation").data()) == 1);
  CHECK(spinhv_matrix_is_rotation(c.data()) == 0);
}

TEST_CASE("states through the C interface") {
  const auto c = named("example1");
  double value = 0.0;
  spinhv_state* state = nullptr;
  REQUIRE(spinhv_quantum_bound(c.data(), 2, &value, &state) == SPINHV_OK);
  CHECK(value == doctest::Approx(-(1 + std::sqrt(17.0)) / 2));
  CHECK(spinhv_state_dim(state) == 9);
  double e = 0.0;
  CHECK(spinhv_bell_expectation(state, c.data(), 2, &e) == SPINHV_OK);
  CHECK(e == doctest::Approx(value));
  double sc[3];
  std::size_t n = 0;
  CHECK(spinhv_schmidt_coefficients(state, 2, sc, 3, &n) == SPINHV_OK);
  CHECK(n == 3);
  double corr[9];
  CHECK(spinhv_state_correlations(state, 2, corr) == SPINHV_OK);
  spinhv_state_destroy(state);
  CHECK(spinhv_quantum_bound(c.data(), 22, &value, nullptr) == SPINHV_ERR_UNSUPPORTED_SPIN);

  spinhv_state* rotated = nullptr;
  const auto rot = named("eq9-rotation");
  REQUIRE(spinhv_rotated_singlet(rot.data(), 4, &rotated) == SPINHV_OK);
  CHECK(spinhv_bell_expectation(rotated, rot.data(), 4, &e) == SPINHV_OK);
  CHECK(e == doctest::Approx(-6.0));
  CHECK(spinhv_bell_expectation(rotated, rot.data(), 2, &e) == SPINHV_ERR_DIMENSION_MISMATCH);
  spinhv_state_destroy(rotated);
  CHECK(spinhv_rotated_singlet(c.data(), 2, &rotated) == SPINHV_ERR_NOT_A_ROTATION);

  spinhv_state* basis = nullptr;
  REQUIRE(spinhv_basis_state(4, 2, &basis) == SPINHV_OK);
  double p = -1.0;
  CHECK(spinhv_projection_probability(basis, SPINHV_AXIS_X, 0, &p) == SPINHV_OK);
  CHECK(std::abs(p) <= 1e-12);
  CHECK(spinhv_projection_probability(basis, SPINHV_AXIS_X, 1, &p) == SPINHV_ERR_VALUE_NOT_IN_SPECTRUM);
  spinhv_state_destroy(basis);

  const double re[2] = {3.0, 0.0};
  const double im[2] = {0.0, 4.0};
  spinhv_state* custom = nullptr;
  REQUIRE(spinhv_state_create(re, im, 2, &custom) == SPINHV_OK);
  double ar = 0.0, ai = 0.0;
  CHECK(spinhv_state_amplitude(custom, 1, &ar, &ai) == SPINHV_OK);
  CHECK(ai == doctest::Approx(0.8));
  CHECK(spinhv_state_amplitude(custom, 2, &ar, &ai) == SPINHV_ERR_INVALID_ARGUMENT);
  spinhv_state_destroy(custom);
  const double zeros[2] = {0.0, 0.0};
  CHECK(spinhv_state_create(zeros, nullptr, 2, &custom) == SPINHV_ERR_INVALID_ARGUMENT);

  double angles[3];
  CHECK(spinhv_euler_from_rotation(rot.data(), angles) == SPINHV_OK);
  CHECK(angles[0] == doctest::Approx(std::atan(1.0)));
}

TEST_CASE("polytope through the C interface") {
  std::size_t pairs = 0, distinct = 0;
  CHECK(spinhv_vertex_count(2, 1, &pairs, &distinct) == SPINHV_OK);
  CHECK(pairs == 144);
  CHECK(distinct == 72);

  const double point[9] = {1, 1, 1, 1, 1, 1, 1, 1, 1};
  spinhv_membership* m = nullptr;
  REQUIRE(spinhv_membership_test(point, 2, 1, 0.0, &m) == SPINHV_OK);
  CHECK(spinhv_membership_inside(m) == 0);
  double f[9], bound = 0.0;
  CHECK(spinhv_membership_separator(m, f, &bound) == SPINHV_OK);
  double fp = 0.0;
  for (int i = 0; i < 9; ++i) fp += f[i] * point[i];
  CHECK(fp < bound);
  spinhv_membership_destroy(m);

  REQUIRE(spinhv_membership_test(point, 2, 0, 0.0, &m) == SPINHV_OK);
  CHECK(spinhv_membership_inside(m) == 1);
  REQUIRE(spinhv_membership_weight_count(m) >= 1);
  double w = 0.0;
  int a[3], b[3];
  CHECK(spinhv_membership_weight(m, 0, &w, a, b) == SPINHV_OK);
  CHECK(w > 0.0);
  CHECK(spinhv_membership_separator(m, f, &bound) == SPINHV_ERR_INVALID_ARGUMENT);
  spinhv_membership_destroy(m);

  spinhv_inclusion inc{};
  CHECK(spinhv_inclusion_check(2, 0.0, &inc) == SPINHV_OK);
  CHECK(inc.strict == 1);
  CHECK(inc.constrained_within_unconstrained == 1);
  CHECK(spinhv_inclusion_check(3, 0.0, &inc) == SPINHV_ERR_INFEASIBLE_SPIN);
}
