#include "text_input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace spinhv::cli {
namespace {

double parse_number(std::string_view tok, std::string_view origin) {
  auto parse_plain = [&](std::string_view t) {
    double v = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
      throw std::runtime_error(std::string(origin) + ": not a finite number: '" + std::string(tok) + "'");
    }
    return v;
  };
  if (const auto slash = tok.find('/'); slash != std::string_view::npos) {
    const double num = parse_plain(tok.substr(0, slash));
    const double den = parse_plain(tok.substr(slash + 1));
    if (den == 0.0) throw std::runtime_error(std::string(origin) + ": zero denominator in '" + std::string(tok) + "'");
    return num / den;
  }
  return parse_plain(tok);
}

}  // namespace

std::array<double, 9> parse_nine(std::string_view text, std::string_view origin) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '\n') comment = false;
    if (ch == '#') comment = true;
    if (comment) continue;
    cleaned.push_back(ch == '[' || ch == ']' || ch == ',' || ch == ';' ? ' ' : ch);
  }

  std::vector<std::string> tokens;
  std::istringstream in(cleaned);
  for (std::string tok; in >> tok;) {
    if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);
    tokens.push_back(tok);
  }
  if (tokens.size() != 9) {
    throw std::runtime_error(std::string(origin) + ": expected 9 numbers (3x3 row-major), found " +
                             std::to_string(tokens.size()));
  }
  std::array<double, 9> out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = parse_number(tokens[i], origin);
  return out;
}

std::array<double, 9> read_nine_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_nine(ss.str(), path);
}

}  // namespace spinhv::cli
