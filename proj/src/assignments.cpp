#include "spinhv/assignments.hpp"

#include <cmath>
#include <string>

#include "spinhv/error.hpp"

namespace spinhv {
namespace {

void require_positive(SpinValue s) {
  if (s.doubled < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "spin magnitude must be positive, got doubled=" + std::to_string(s.doubled));
  }
}

// Integer square root for non-negative n.
std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

template <typename Visit>
void for_each_assignment(SpinValue s, Visit&& visit) {
  const int d = s.doubled;
  for (int x = -d; x <= d; x += 2)
    for (int y = -d; y <= d; y += 2)
      for (int z = -d; z <= d; z += 2) visit(Assignment::from_doubled(x, y, z));
}

}  // namespace

std::vector<Assignment> enumerate_unconstrained(SpinValue s) {
  require_positive(s);
  std::vector<Assignment> out;
  const auto n = static_cast<std::size_t>(s.multiplicity());
  out.reserve(n * n * n);
  for_each_assignment(s, [&](const Assignment& a) { out.push_back(a); });
  return out;
}

std::vector<Assignment> enumerate_constrained(SpinValue s) {
  require_positive(s);
  const std::int64_t target = s.quadrupled_casimir();
  std::vector<Assignment> out;
  for_each_assignment(s, [&](const Assignment& a) {
    if (a.quadrupled_square_sum() == target) out.push_back(a);
  });
  return out;
}

bool feasible_by_enumeration(SpinValue s) {
  require_positive(s);
  const int d = s.doubled;
  const std::int64_t target = s.quadrupled_casimir();
  // Two components fixed, the third is forced up to sign.
  for (int x = d % 2; x <= d; x += 2) {
    for (int y = x; y <= d; y += 2) {
      const std::int64_t rest = target - std::int64_t{x} * x - std::int64_t{y} * y;
      if (rest < 0) break;
      const std::int64_t z = isqrt(rest);
      if (z * z == rest && z <= d && (d - z) % 2 == 0) return true;
    }
  }
  return false;
}

std::map<std::int64_t, std::uint64_t> squared_magnitude_classes(SpinValue s) {
  require_positive(s);
  std::map<std::int64_t, std::uint64_t> hist;
  for_each_assignment(s, [&](const Assignment& a) { ++hist[a.quadrupled_square_sum()]; });
  return hist;
}

}  // namespace spinhv
