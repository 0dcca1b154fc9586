// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spinhv/assignments.hpp"
#include "spinhv/bounds.hpp"
#include "spinhv/catalog.hpp"
#include "spinhv/number_theory.hpp"
#include "spinhv/polytope.hpp"
#include "spinhv/quantum.hpp"

using namespace spinhv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double min_eigen_spread(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(b, Eigen::EigenvaluesOnly);
  return (ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff();
}

Outcome feasibility_formula() {
  Outcome out;
  for (int d = 1; d <= 200; ++d) {
    const bool formula = magnitude_feasible(SpinValue{d});
    out.require(formula == oracle::magnitude_feasible_by_triple_loop(d),
                "formula disagrees with brute force at 2s=" + std::to_string(d));
    out.require(formula == feasible_by_enumeration(SpinValue{d}),
                "formula disagrees with library enumeration at 2s=" + std::to_string(d));
  }
  std::vector<int> integers;
  for (const auto& s : infeasible_spins_up_to(120))
    if (!s.is_half_integer()) integers.push_back(s.doubled / 2);
  out.require(integers == std::vector<int>{12, 15, 19, 44, 51}, "integer infeasible set up to 60 differs");
  if (out.ok) out.detail = "200 spins agree; integer infeasible {12,15,19,44,51}";
  return out;
}

Outcome three_halves_classes() {
  Outcome out;
  const auto classes = squared_magnitude_classes(SpinValue{3});
  std::set<std::int64_t> keys;
  for (const auto& [k, n] : classes) keys.insert(k);
  out.require(keys == std::set<std::int64_t>{27, 19, 11, 3}, "class keys differ from {27,19,11,3}/4");
  out.require(!keys.contains(15), "15/4 present");
  if (out.ok) out.detail = "{27/4, 19/4, 11/4, 3/4}, 15/4 absent";
  return out;
}

Outcome example(const CoefficientMatrix& c, int d, double beta, double beta_bar, double beta_q,
                double classical_tol, double quantum_tol) {
  Outcome out;
  const auto b = classical_bound(c, SpinValue{d}, true);
  const auto bb = classical_bound(c, SpinValue{d}, false);
  const auto q = quantum_bound(c, SpinValue{d});
  out.require(std::abs(b.value - beta) <= classical_tol, "beta = " + fmt(b.value));
  out.require(std::abs(bb.value - beta_bar) <= classical_tol, "beta_bar = " + fmt(bb.value));
  out.require(std::abs(q.value - beta_q) <= quantum_tol, "beta_Q = " + fmt(q.value));
  if (out.ok) out.detail = "beta=" + fmt(b.value) + " beta_bar=" + fmt(bb.value) + " beta_Q=" + fmt(q.value);
  return out;
}

Outcome table_one() {
  Outcome out;
  const double r = std::sqrt(2.0);
  const double beta[] = {-1 - 1 / r, -1 + 1 / r - 4 * r, -4 * (1 + r), -14 * r};
  const double beta_bar[] = {-1 - r, -4 - 4 * r, -9 - 9 * r, -16 - 16 * r};
  const double quantum[] = {-2, -6, -12, -20};
  const auto c = catalog::z45_rotation();
  double worst_c = 0.0, worst_q = 0.0;
  for (int i = 0; i < 4; ++i) {
    const SpinValue s{2 * (i + 1)};
    const auto b = classical_bound(c, s, true, 4);
    const auto bb = classical_bound(c, s, false, 4);
    const auto q = quantum_bound(c, s);
    const double rot = expectation(rotated_singlet(c, s), bell_operator(c, s));
    worst_c = std::max({worst_c, std::abs(b.value - beta[i]), std::abs(bb.value - beta_bar[i])});
    worst_q = std::max({worst_q, std::abs(q.value - quantum[i]), std::abs(rot - quantum[i])});
  }
  out.require(worst_c <= 1e-9, "classical deviation " + fmt(worst_c));
  out.require(worst_q <= 1e-8, "quantum deviation " + fmt(worst_q));
  if (out.ok) out.detail = "max classical dev " + fmt(worst_c) + ", quantum dev " + fmt(worst_q);
  return out;
}

Outcome operator_invariants() {
  Outcome out;
  const std::complex<double> i(0.0, 1.0);
  double worst = 0.0;
  for (int d = 1; d <= 12; ++d) {
    const SpinValue s{d};
    const auto ops = spin_operators(s);
    const auto n = s.multiplicity();
    const auto& x = ops.x.matrix();
    const auto& y = ops.y.matrix();
    const auto& z = ops.z.matrix();
    const double cas = (x * x + y * y + z * z - s.casimir() * ComplexMatrix::Identity(n, n)).norm();
    const double com = (x * y - y * x - i * z).norm();
    worst = std::max({worst, cas, com});
  }
  out.require(worst <= 1e-10, "residual " + fmt(worst));
  if (out.ok) out.detail = "max residual " + fmt(worst);
  return out;
}

Outcome rotated_singlet_identity() {
  Outcome out;
  std::mt19937_64 rng(2024);
  double worst_e = 0.0, worst_spec = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CoefficientMatrix c(oracle::random_rotation(rng));
    for (int d : {1, 2, 3, 4}) {
      const SpinValue s{d};
      const auto h = bell_operator(c, s);
      worst_e = std::max(worst_e, std::abs(expectation(rotated_singlet(c, s), h) + s.casimir()));
      worst_spec = std::max(worst_spec, min_eigen_spread(h.matrix(), bell_operator(CoefficientMatrix::identity(), s).matrix()));
    }
  }
  out.require(worst_e <= 1e-8, "expectation deviation " + fmt(worst_e));
  out.require(worst_spec <= 1e-8, "spectrum deviation " + fmt(worst_spec));
  if (out.ok) out.detail = "expectation dev " + fmt(worst_e) + ", spectrum dev " + fmt(worst_spec);
  return out;
}

Outcome singlet_correlator() {
  Outcome out;
  double worst = 0.0;
  for (int d = 1; d <= 12; ++d) {
    const SpinValue s{d};
    const auto ops = spin_operators(s);
    const auto psi = singlet_state(s);
    const double expected = -s.casimir() / 3.0;
    worst = std::max(worst, std::abs(oracle::singlet_correlator_closed_form(d) - expected));
    for (Axis k : kAxes) {
      const HermitianOperator kk(kron(ops[k].matrix(), ops[k].matrix()));
      worst = std::max(worst, std::abs(expectation(psi, kk) - expected));
    }
  }
  out.require(worst <= 1e-10, "deviation " + fmt(worst));
  if (out.ok) out.detail = "max deviation " + fmt(worst);
  return out;
}

Outcome projection_refutation() {
  Outcome out;
  const auto state = basis_state(SpinValue{4}, SpinValue{2});
  double worst = 0.0;
  for (Axis a : kAxes) worst = std::max(worst, projection_probability(state, a, SpinValue{0}));
  out.require(worst <= 1e-12, "probability " + fmt(worst));
  if (out.ok) out.detail = "max probability " + fmt(worst);
  return out;
}

Outcome schmidt_structure() {
  Outcome out;
  const auto q = quantum_bound(catalog::example1(), SpinValue{2});
  const auto sc = schmidt_coefficients(q.state, SpinValue{2});
  int equal_pairs = 0;
  int distinct_index = -1;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if (std::abs(sc[j] - sc[k]) <= 1e-9 && std::abs(sc[i] - sc[j]) > 1e-9) {
      ++equal_pairs;
      distinct_index = i;
    }
  }
  out.require(equal_pairs == 1, "not exactly two equal coefficients");
  out.require(distinct_index >= 0 && sc[distinct_index] > 1e-9, "third coefficient is zero");
  out.detail = "coefficients " + fmt(sc[0]) + ", " + fmt(sc[1]) + ", " + fmt(sc[2]);
  return out;
}

Outcome polytope_separation() {
  Outcome out;
  const auto q = quantum_bound(catalog::example1(), SpinValue{2});
  const CorrelationPoint p{correlation_matrix(q.state, SpinValue{2})};

  const auto cons = vertex_correlations(SpinValue{2}, true);
  const auto r1 = membership(p, cons);
  out.require(!r1.inside && r1.separator.has_value(), "point not separated from LHV'");
  if (r1.separator) {
    double min_vertex = 1e300;
    for (const auto& v : cons.vertices) min_vertex = std::min(min_vertex, r1.separator->evaluate(v.point));
    out.require(min_vertex >= r1.separator->bound - 1e-9, "separator violated by a vertex");
    out.require(r1.separator->evaluate(p) < r1.separator->bound, "separator does not cut the point");
  }

  const auto unc = vertex_correlations(SpinValue{2}, false);
  const auto r2 = membership(p, unc);
  out.require(r2.inside, "point not inside LHV");
  double total = 0.0, worst = 0.0;
  Matrix3 rebuilt{};
  for (const auto& w : r2.weights) {
    out.require(w.weight >= 0.0, "negative weight");
    total += w.weight;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) rebuilt[k][l] += w.weight * w.vertex.point(k, l);
  }
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(rebuilt[k][l] - p(k, l)));
  out.require(std::abs(total - 1.0) <= 1e-7, "weights sum to " + fmt(total));
  out.require(worst <= 1e-7, "reconstruction error " + fmt(worst));
  if (out.ok)
    out.detail = "outside LHV' (margin " + fmt(r1.certificate_residual) + "), inside LHV with " +
                 std::to_string(r2.weights.size()) + " vertices, error " + fmt(worst);
  return out;
}

Outcome property_suites() {
  Outcome out;
  std::mt19937_64 rng(7);
  int trials = 0;
  for (int d : {1, 2, 4}) {
    for (int t = 0; t < 100; ++t) {
      const CoefficientMatrix c(oracle::random_matrix(rng));
      const auto b = classical_bound(c, SpinValue{d}, true);
      const auto bb = classical_bound(c, SpinValue{d}, false);
      const auto brute = oracle::classical_bound_double_loop(c.entries(), d, false);
      out.require(b.value >= bb.value - 1e-12, "beta < beta_bar at 2s=" + std::to_string(d));
      out.require(std::abs(bb.value - brute.value) <= 1e-9,
                  "shortcut " + fmt(bb.value) + " vs brute force " + fmt(brute.value));
      ++trials;
    }
  }
  if (out.ok) out.detail = std::to_string(trials) + " random matrices";
  return out;
}

}  // namespace

int main() {
  const double r17 = std::sqrt(17.0);
  const std::vector<Criterion> criteria = {
      {1, "feasibility formula vs enumeration", 5, feasibility_formula},
      {2, "s=3/2 squared-magnitude classes", 1, three_halves_classes},
      {3, "example 1 bounds", 1,
       [&] { return example(catalog::example1(), 2, -2, -3, -(1 + r17) / 2, 0.0, 1e-9); }},
      {4, "example 2 bounds", 1, [&] { return example(catalog::example2(), 2, -4, -7, -r17, 0.0, 1e-9); }},
      {5, "example 3 bounds", 5, [] { return example(catalog::example3(), 4, -20, -34, -20.1897, 1e-9, 5e-4); }},
      {6, "rotation table s=1..4", 60, table_one},
      {7, "spin operator invariants", 10, operator_invariants},
      {8, "rotated singlet identity", 30, rotated_singlet_identity},
      {9, "singlet correlator", 5, singlet_correlator},
      {10, "s=2 projection refutation", 1, projection_refutation},
      {11, "example 1 Schmidt structure", 1, schmidt_structure},
      {12, "polytope separation", 10, polytope_separation},
      {13, "classical bound properties", 60, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "runtime " + fmt(secs) + " s over limit " + fmt(c.limit_seconds) + " s";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %2d %-38s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
