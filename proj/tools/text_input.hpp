#pragma once

#include <array>
#include <string>
#include <string_view>

namespace spinhv::cli {

/// Reads exactly nine numbers from hand-edited text: '#' starts a comment,
/// brackets and commas are separators, and p/q fractions are accepted.
/// Throws std::runtime_error with a readable message otherwise.
std::array<double, 9> parse_nine(std::string_view text, std::string_view origin);

std::array<double, 9> read_nine_from_file(const std::string& path);

}  // namespace spinhv::cli
