#pragma once

#include <cstdint>
#include <vector>

#include "spinhv/spin_value.hpp"

namespace spinhv {

/// Legendre: n is a sum of three integer squares unless n = 4^a (8b + 7).
bool is_sum_of_three_squares(std::uint64_t n) noexcept;

/// Whether s_x^2 + s_y^2 + s_z^2 = s(s+1) has a solution with every s_i in the
/// spectrum {s, s-1, ..., -s}.
///
/// Half-integer s: solvable iff 2s = 1 (mod 4).
/// Integer s: unsolvable iff s has one of the forms
///   4(8i+3), 16(8i+7) 4^j, 4(8i+5) - 1, 16(8i+1) 4^j - 1.
/// Each form is tested by stripping powers of four from s (or s+1) and looking
/// at the odd residue mod 8, so a query is O(log s).
///
/// Throws Error(InvalidArgument) when s.doubled < 1.
bool magnitude_feasible(SpinValue s);

/// All s with 1 <= 2s <= max_doubled for which magnitude_feasible is false,
/// ascending.
std::vector<SpinValue> infeasible_spins_up_to(int max_doubled);

}  // namespace spinhv
