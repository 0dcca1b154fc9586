#include "spinhv/number_theory.hpp"

#include "spinhv/error.hpp"

namespace spinhv {
namespace {

constexpr std::uint64_t strip_powers_of_four(std::uint64_t n) noexcept {
  while (n != 0 && n % 4 == 0) n /= 4;
  return n;
}

// s = 4(8i+3) or s = 16(8i+7) 4^j.
bool even_form_blocks(std::uint64_t s) noexcept {
  if (s % 4 != 0) return false;
  const std::uint64_t q = s / 4;
  if (q % 8 == 3) return true;
  if (q % 4 != 0) return false;
  return strip_powers_of_four(q / 4) % 8 == 7;
}

// s + 1 = 4(8i+5) or s + 1 = 16(8i+1) 4^j.
bool odd_form_blocks(std::uint64_t s) noexcept {
  const std::uint64_t t = s + 1;
  if (t % 4 != 0) return false;
  const std::uint64_t q = t / 4;
  if (q % 8 == 5) return true;
  if (q % 4 != 0) return false;
  return strip_powers_of_four(q / 4) % 8 == 1;
}

}  // namespace

bool is_sum_of_three_squares(std::uint64_t n) noexcept {
  return strip_powers_of_four(n) % 8 != 7;
}

bool magnitude_feasible(SpinValue s) {
  if (s.doubled < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "spin magnitude must be positive, got doubled=" + std::to_string(s.doubled));
  }
  if (s.is_half_integer()) return s.doubled % 4 == 1;

  const auto n = static_cast<std::uint64_t>(s.doubled / 2);
  return n % 2 == 0 ? !even_form_blocks(n) : !odd_form_blocks(n);
}

std::vector<SpinValue> infeasible_spins_up_to(int max_doubled) {
  std::vector<SpinValue> out;
  for (int d = 1; d <= max_doubled; ++d) {
    const auto s = SpinValue::from_doubled(d);
    if (!magnitude_feasible(s)) out.push_back(s);
  }
  return out;
}

}  // namespace spinhv
