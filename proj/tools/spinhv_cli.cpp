// spinhv command-line tool. Talks to the library only through the C API and
// prints one JSON report per invocation on stdout.
//
// Exit codes: 0 success, 2 input error, 3 target mismatch, 4 numerical
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinhv/spinhv.h"
#include "text_input.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Nine = std::array<double, 9>;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNumerical = 4;

class CliFailure : public std::runtime_error {
public:
  CliFailure(int exit_code, const std::string& what) : std::runtime_error(what), code_(exit_code) {}
  int exit_code() const noexcept { return code_; }

private:
  int code_;
};

int exit_code_for(spinhv_status st) {
  switch (st) {
    case SPINHV_ERR_EIGENSOLVER_FAILURE:
    case SPINHV_ERR_LP_NUMERICAL_FAILURE:
    case SPINHV_ERR_INTERNAL:
      return kExitNumerical;
    default:
      return kExitInput;
  }
}

void check(spinhv_status st) {
  if (st == SPINHV_OK) return;
  throw CliFailure(exit_code_for(st), std::string(spinhv_status_name(st)) + ": " +
                                          spinhv_last_error_message());
}

struct StateDeleter {
  void operator()(spinhv_state* s) const { spinhv_state_destroy(s); }
};
using StatePtr = std::unique_ptr<spinhv_state, StateDeleter>;

struct MembershipDeleter {
  void operator()(spinhv_membership* m) const { spinhv_membership_destroy(m); }
};
using MembershipPtr = std::unique_ptr<spinhv_membership, MembershipDeleter>;

struct AssignmentsDeleter {
  void operator()(spinhv_assignment_list* l) const { spinhv_assignments_destroy(l); }
};
using AssignmentsPtr = std::unique_ptr<spinhv_assignment_list, AssignmentsDeleter>;

std::string rational(long long num, long long den) {
  long long a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) return "0";
  num /= a;
  den /= a;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Json spin_json(int doubled) {
  return Json{{"doubled", doubled}, {"value", rational(doubled, 2)}};
}

Json assignment_json(const int d[3]) {
  // Doubled components; halve for the projection values.
  return Json{{"doubled", {d[0], d[1], d[2]}},
              {"values", {rational(d[0], 2), rational(d[1], 2), rational(d[2], 2)}}};
}

Json matrix_json(const double* m) {
  Json rows = Json::array();
  for (int k = 0; k < 3; ++k) rows.push_back({m[3 * k], m[3 * k + 1], m[3 * k + 2]});
  return rows;
}

Json report(const std::string& command, Json inputs, Json results, Json tolerances) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["results"] = std::move(results);
  r["tolerances"] = std::move(tolerances);
  r["version"] = spinhv_version();
  return r;
}

void require_spin_range(int doubled, int lo, int hi, const char* what) {
  if (doubled < lo || doubled > hi) {
    throw CliFailure(kExitInput, std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "], got " + std::to_string(doubled));
  }
}

// Tolerance used for target comparisons and polytope membership unless the
// expert override is set.
std::optional<double> tolerance_override() {
  const char* raw = std::getenv("SPINHV_TOLERANCE_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw CliFailure(kExitInput, std::string("SPINHV_TOLERANCE_OVERRIDE is not a positive number: ") + raw);
  }
  return v;
}

Nine resolve_matrix(const std::string& spec, std::string& source) {
  Nine c{};
  if (spinhv_named_matrix(spec.c_str(), c.data()) == SPINHV_OK) {
    source = "builtin:" + spec;
    return c;
  }
  try {
    source = "file:" + spec;
    return spinhv::cli::read_nine_from_file(spec);
  } catch (const std::exception& e) {
    throw CliFailure(kExitInput, std::string(e.what()) +
                                     " (built-in names: example1, example2, example3, "
                                     "z45-rotation, identity)");
  }
}

std::optional<spinhv_bound> try_classical(const Nine& c, int d, bool constrained, unsigned threads) {
  spinhv_bound b{};
  const spinhv_status st = spinhv_classical_bound(c.data(), d, constrained ? 1 : 0, threads, &b);
  if (constrained && st == SPINHV_ERR_INFEASIBLE_SPIN) return std::nullopt;
  check(st);
  return b;
}

Json bound_json(const std::optional<spinhv_bound>& b) {
  if (!b) return Json{{"infeasible", true}, {"value", nullptr}};
  return Json{{"infeasible", false},
              {"value", b->value},
              {"witness_a", assignment_json(b->witness_a)},
              {"witness_b", assignment_json(b->witness_b)}};
}

void write_point_file(const std::string& path, const double corr[9], const std::string& note) {
  std::ofstream out(path);
  if (!out) throw CliFailure(kExitInput, "cannot write '" + path + "'");
  out << "# " << note << "\n# <S_k^(A) S_l^(B)>, rows k = x, y, z\n";
  out << std::setprecision(17);
  for (int k = 0; k < 3; ++k)
    out << corr[3 * k] << ' ' << corr[3 * k + 1] << ' ' << corr[3 * k + 2] << '\n';
}

// ---- commands ------------------------------------------------------------

int cmd_feasibility(int d) {
  require_spin_range(d, 1, 2000, "--spin-doubled");
  int formula = 0;
  check(spinhv_magnitude_feasible(d, &formula));

  Json results;
  results["spin"] = spin_json(d);
  results["s_times_s_plus_1"] = rational(static_cast<long long>(d) * (d + 2), 4);
  results["formula_feasible"] = formula != 0;

  bool agree = true;
  if (d <= 200) {
    int oracle = 0;
    check(spinhv_feasible_by_enumeration(d, &oracle));
    agree = (oracle != 0) == (formula != 0);
    results["oracle_feasible"] = oracle != 0;
    results["agreement"] = agree;
  } else {
    results["oracle_feasible"] = nullptr;
    results["agreement"] = nullptr;
  }

  if (d <= 40) {
    spinhv_assignment_list* raw = nullptr;
    check(spinhv_assignments_create(d, 1, &raw));
    AssignmentsPtr list(raw);
    Json assignments = Json::array();
    for (size_t i = 0; i < spinhv_assignments_size(list.get()); ++i) {
      int a[3];
      check(spinhv_assignments_get(list.get(), i, a));
      assignments.push_back({a[0], a[1], a[2]});
    }
    results["constrained_assignment_count"] = assignments.size();
    results["constrained_assignments_doubled"] = std::move(assignments);

    size_t count = 0;
    check(spinhv_magnitude_classes(d, nullptr, nullptr, 0, &count));
    std::vector<int64_t> keys(count);
    std::vector<uint64_t> counts(count);
    check(spinhv_magnitude_classes(d, keys.data(), counts.data(), count, &count));
    const long long casimir4 = static_cast<long long>(d) * (d + 2);
    Json classes = Json::array();
    for (size_t i = keys.size(); i-- > 0;) {
      classes.push_back({{"s_dot_s", rational(keys[i], 4)},
                         {"quadrupled", keys[i]},
                         {"count", counts[i]},
                         {"conserves_magnitude", keys[i] == casimir4}});
    }
    results["squared_magnitude_classes"] = std::move(classes);
  }

  std::cout << report("feasibility", Json{{"spin_doubled", d}}, std::move(results),
                      Json{{"exact_integer_arithmetic", true}})
                   .dump(2)
            << '\n';
  if (!agree) {
    std::cerr << "feasibility: closed form and enumeration disagree for 2s=" << d << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_bounds(const std::string& matrix_spec, int d, unsigned threads, const std::string& point_out) {
  require_spin_range(d, 1, 20, "--spin-doubled");
  std::string source;
  const Nine c = resolve_matrix(matrix_spec, source);

  const auto beta = try_classical(c, d, true, threads);
  const auto beta_bar = try_classical(c, d, false, threads);

  double beta_q = 0.0;
  spinhv_state* raw = nullptr;
  check(spinhv_quantum_bound(c.data(), d, &beta_q, &raw));
  StatePtr state(raw);

  size_t n = 0;
  check(spinhv_schmidt_coefficients(state.get(), d, nullptr, 0, &n));
  std::vector<double> schmidt(n);
  check(spinhv_schmidt_coefficients(state.get(), d, schmidt.data(), n, &n));
  double corr[9];
  check(spinhv_state_correlations(state.get(), d, corr));

  constexpr double kVerdictTol = 1e-9;
  Json results;
  results["spin"] = spin_json(d);
  results["beta"] = bound_json(beta);
  results["beta_bar"] = bound_json(beta_bar);
  results["beta_q"] = beta_q;
  results["violates_beta"] = beta ? Json(beta_q < beta->value - kVerdictTol) : Json(nullptr);
  results["violates_beta_bar"] = beta_q < beta_bar->value - kVerdictTol;
  results["optimal_state_schmidt_coefficients"] = schmidt;
  results["optimal_state_correlations"] = matrix_json(corr);

  if (!point_out.empty()) {
    write_point_file(point_out, corr, "optimal state of " + source + ", 2s=" + std::to_string(d));
  }

  Json inputs{{"matrix", source}, {"coefficients", matrix_json(c.data())}, {"spin_doubled", d},
              {"threads", threads}};
  std::cout << report("bounds", std::move(inputs), std::move(results),
                      Json{{"tie", 1e-12}, {"eigen_residual", 1e-9}, {"violation_margin", kVerdictTol}})
                   .dump(2)
            << '\n';
  return kExitOk;
}

struct TableTarget {
  int doubled;
  double beta;
  double beta_bar;
  double quantum;
};

int cmd_table1(int max_d, unsigned threads) {
  require_spin_range(max_d, 1, 20, "--max-spin-doubled");
  const double r2 = std::sqrt(2.0);
  const std::vector<TableTarget> targets = {
      {2, -1 - 1 / r2, -1 - r2, -2},
      {4, -1 + 1 / r2 - 4 * r2, -4 - 4 * r2, -6},
      {6, -4 * (1 + r2), -9 - 9 * r2, -12},
      {8, -14 * r2, -16 - 16 * r2, -20},
  };
  const auto override_tol = tolerance_override();
  const double classical_tol = override_tol.value_or(1e-9);
  const double quantum_tol = override_tol.value_or(1e-8);

  Nine c{};
  check(spinhv_named_matrix("z45-rotation", c.data()));

  bool all_pass = true;
  Json rows = Json::array();
  for (int d = 1; d <= max_d; ++d) {
    const auto beta = try_classical(c, d, true, threads);
    const auto beta_bar = try_classical(c, d, false, threads);
    const double s = d / 2.0;
    const double casimir = -s * (s + 1);

    spinhv_state* raw = nullptr;
    check(spinhv_rotated_singlet(c.data(), d, &raw));
    StatePtr phi(raw);
    double rotated = 0.0;
    check(spinhv_bell_expectation(phi.get(), c.data(), d, &rotated));
    double lowest = 0.0;
    check(spinhv_quantum_bound(c.data(), d, &lowest, nullptr));

    Json row;
    row["spin"] = spin_json(d);
    row["beta"] = beta ? Json(beta->value) : Json(nullptr);
    row["beta_bar"] = beta_bar->value;
    row["minus_s_s_plus_1"] = casimir;
    row["rotated_singlet_expectation"] = rotated;
    row["bell_operator_lowest_eigenvalue"] = lowest;
    row["quantum_below_beta"] = beta ? Json(rotated < beta->value) : Json(nullptr);

    for (const auto& t : targets) {
      if (t.doubled != d) continue;
      const bool ok = beta && std::abs(beta->value - t.beta) <= classical_tol &&
                      std::abs(beta_bar->value - t.beta_bar) <= classical_tol &&
                      std::abs(rotated - t.quantum) <= quantum_tol &&
                      std::abs(lowest - t.quantum) <= quantum_tol;
      row["target"] = Json{{"beta", t.beta}, {"beta_bar", t.beta_bar}, {"quantum", t.quantum},
                           {"pass", ok}};
      all_pass = all_pass && ok;
    }
    rows.push_back(std::move(row));
  }

  Json results{{"matrix", matrix_json(c.data())}, {"rows", std::move(rows)}, {"all_targets_pass", all_pass}};
  std::cout << report("table1", Json{{"max_spin_doubled", max_d}, {"threads", threads}},
                      std::move(results),
                      Json{{"classical", classical_tol}, {"quantum", quantum_tol}})
                   .dump(2)
            << '\n';
  if (!all_pass) {
    std::cerr << "table1: at least one row misses its target\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_membership(const std::string& point_path, int d, bool constrained) {
  Nine p{};
  try {
    p = spinhv::cli::read_nine_from_file(point_path);
  } catch (const std::exception& e) {
    throw CliFailure(kExitInput, e.what());
  }
  if (d < 1) throw CliFailure(kExitInput, "--spin-doubled must be positive");
  const double tol = tolerance_override().value_or(1e-8);

  spinhv_membership* raw = nullptr;
  check(spinhv_membership_test(p.data(), d, constrained ? 1 : 0, tol, &raw));
  MembershipPtr m(raw);

  Json results;
  results["spin"] = spin_json(d);
  results["polytope"] = constrained ? "LHV'" : "LHV";
  results["inside"] = spinhv_membership_inside(m.get()) != 0;
  if (spinhv_membership_inside(m.get())) {
    Json weights = Json::array();
    for (size_t i = 0; i < spinhv_membership_weight_count(m.get()); ++i) {
      double w = 0.0;
      int a[3], b[3];
      check(spinhv_membership_weight(m.get(), i, &w, a, b));
      weights.push_back({{"weight", w}, {"a", assignment_json(a)}, {"b", assignment_json(b)}});
    }
    results["weights"] = std::move(weights);
    results["max_reconstruction_error"] = spinhv_membership_residual(m.get());
  } else {
    double f[9], bound = 0.0;
    check(spinhv_membership_separator(m.get(), f, &bound));
    double at_point = 0.0;
    for (int i = 0; i < 9; ++i) at_point += f[i] * p[i];
    results["separator"] = Json{{"functional", matrix_json(f)}, {"bound", bound}, {"value_at_point", at_point}};
  }

  Json inputs{{"point_file", point_path}, {"point", matrix_json(p.data())}, {"spin_doubled", d},
              {"constrained", constrained}};
  std::cout << report("membership", std::move(inputs), std::move(results), Json{{"coordinate", tol}}).dump(2)
            << '\n';
  return kExitOk;
}

int cmd_inclusion(int d) {
  if (d < 1) throw CliFailure(kExitInput, "--spin-doubled must be positive");
  const double tol = tolerance_override().value_or(1e-8);
  spinhv_inclusion inc{};
  check(spinhv_inclusion_check(d, tol, &inc));

  Json results;
  results["spin"] = spin_json(d);
  results["constrained_vertices"] = inc.constrained_vertices;
  results["unconstrained_vertices"] = inc.unconstrained_vertices;
  results["constrained_within_unconstrained"] = inc.constrained_within_unconstrained != 0;
  results["strict"] = inc.strict != 0;
  results["lp_solves"] = inc.lp_solves;
  if (inc.strict) {
    results["witness"] = Json{{"a", assignment_json(inc.witness_a)},
                              {"b", assignment_json(inc.witness_b)},
                              {"functional", matrix_json(inc.witness_functional)},
                              {"bound", inc.witness_bound}};
  }
  std::cout << report("inclusion", Json{{"spin_doubled", d}}, std::move(results), Json{{"coordinate", tol}}).dump(2)
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-magnitude-conserving hidden variable models: feasibility, Bell-type bounds, "
               "quantum values and correlation polytopes"};
  app.set_version_flag("--version", std::string(spinhv_version()));
  app.require_subcommand(1);

  int spin_doubled = 0;
  int max_spin_doubled = 8;
  unsigned threads = 1;
  std::string matrix;
  std::string point;
  std::string write_point;
  bool constrained = false;

  auto* feas = app.add_subcommand("feasibility", "Does a magnitude-conserving assignment exist for s?");
  feas->add_option("--spin-doubled", spin_doubled, "2s, 1..2000")->required();

  auto* bounds = app.add_subcommand("bounds", "Classical and quantum bounds of one inequality");
  bounds->add_option("--matrix", matrix, "Built-in name or path to a 3x3 coefficient file")->required();
  bounds->add_option("--spin-doubled", spin_doubled, "2s, 1..20")->required();
  bounds->add_option("--threads", threads, "Worker threads for the classical search")->check(CLI::Range(1u, 64u));
  bounds->add_option("--write-point", write_point, "Write the optimal state's correlators to this file");

  auto* table = app.add_subcommand("table1", "Rotation-matrix inequality for s = 1/2 upward");
  table->add_option("--max-spin-doubled", max_spin_doubled, "Largest 2s, at most 20");
  table->add_option("--threads", threads, "Worker threads for the classical search")->check(CLI::Range(1u, 64u));

  auto* member = app.add_subcommand("membership", "Is a correlation point inside the LHV or LHV' polytope?");
  member->add_option("--point", point, "Path to 9 correlators, row-major")->required();
  member->add_option("--spin-doubled", spin_doubled, "2s")->required();
  member->add_flag("--constrained", constrained, "Use the magnitude-conserving polytope");

  auto* incl = app.add_subcommand("inclusion", "Certify that LHV' is strictly inside LHV");
  incl->add_option("--spin-doubled", spin_doubled, "2s")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (feas->parsed()) return cmd_feasibility(spin_doubled);
    if (bounds->parsed()) return cmd_bounds(matrix, spin_doubled, threads, write_point);
    if (table->parsed()) return cmd_table1(max_spin_doubled, threads);
    if (member->parsed()) return cmd_membership(point, spin_doubled, constrained);
    if (incl->parsed()) return cmd_inclusion(spin_doubled);
  } catch (const CliFailure& e) {
    std::cerr << "spinhv: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "spinhv: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}
