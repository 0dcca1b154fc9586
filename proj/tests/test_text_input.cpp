#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "text_input.hpp"

using spinhv::cli::parse_nine;

TEST_CASE("plain whitespace-separated matrix") {
  const auto v = parse_nine("1 0 0\n0 1 0\n0 0 1\n", "test");
  CHECK(v == std::array<double, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1});
}

TEST_CASE("brackets, commas, comments and fractions") {
  const auto v = parse_nine("# header\n[[1/2, -1/2, 0], # row 0\n [0.5; +0.5; 0],\n [0, 0, 1e-1]]", "test");
  CHECK(v[0] == 0.5);
  CHECK(v[1] == -0.5);
  CHECK(v[3] == 0.5);
  CHECK(v[4] == 0.5);
  CHECK(v[8] == doctest::Approx(0.1));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_nine("1 2 3", "t"), std::runtime_error);
  CHECK_THROWS_AS(parse_nine("1 2 3 4 5 6 7 8 9 10", "t"), std::runtime_error);
  CHECK_THROWS_AS(parse_nine("1 2 3 4 5 6 7 8 x", "t"), std::runtime_error);
  CHECK_THROWS_AS(parse_nine("1 2 3 4 5 6 7 8 1/0", "t"), std::runtime_error);
  CHECK_THROWS_AS(parse_nine("1 2 3 4 5 6 7 8 nan", "t"), std::runtime_error);
  CHECK_THROWS_AS(parse_nine("1 2 3 4 5 6 7 8 inf", "t"), std::runtime_error);
  try {
    parse_nine("1 2", "where.txt");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("where.txt") != std::string::npos);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "spinhv_text_input_test.txt";
  {
    std::ofstream f(path);
    f << "0 1 0\n1 0 0\n0 0 -1\n";
  }
  const auto v = spinhv::cli::read_nine_from_file(path.string());
  CHECK(v[1] == 1.0);
  CHECK(v[8] == -1.0);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(spinhv::cli::read_nine_from_file(path.string()), std::runtime_error);
}
