#include "domclq/error.hpp"
#include "domclq/io.hpp"
#include "domclq/rng.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

using namespace domclq;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

std::string probmap_error(std::string_view text) {
  try {
    read_probmap(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("dimacs parses a path") {
  CHECK(parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n") == test::path(3));
  CHECK(parse_dimacs("c comment\np edge 3 2\nc another\ne 2 3\ne 2 1\n") == test::path(3));
  CHECK(parse_dimacs("p col 3 2\r\ne 1 2\r\ne 2 3") == test::path(3));
}

TEST_CASE("dimacs round trips") {
  const std::string k3 = write_dimacs(test::complete(3));
  CHECK(k3 == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  CHECK(write_dimacs(parse_dimacs(k3)) == k3);
  CHECK(write_dimacs(parse_dimacs("p edge 3 3\ne 3 2\ne 1 3\ne 2 1\n")) == k3);
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gnp_generate(1 + static_cast<int>(rng.below(60)), rng.uniform(), rng.next());
    CHECK(parse_dimacs(write_dimacs(g)) == g);
  }
}

TEST_CASE("dimacs errors name the line") {
  CHECK(parse_error("p edge 3 1\ne 4 1\n") == "vertex out of range, line 2");
  CHECK(parse_error("p edge 3 1\ne 2 2\n") == "self-loop, line 2");
  CHECK(parse_error("p edge x 1\n") == "malformed header, line 1");
  CHECK(parse_error("p edge 3 2\ne 1 2\ne 2 1\n") == "duplicate edge, line 3");
  CHECK(parse_error("e 1 2\n") == "edge before header, line 1");
  CHECK(parse_error("p edge 3 1\ne 1\n") == "malformed edge line, line 2");
  CHECK(parse_error("p edge 3 1\nq\n") == "unrecognized line, line 2");
  CHECK(parse_error("p edge 3 1\np edge 3 1\n") == "duplicate header, line 2");
  CHECK(parse_error("") == "missing header");
  CHECK(parse_error("p edge 3 2\ne 1 2\n").starts_with("edge count mismatch"));
  try {
    parse_dimacs("p edge 3 1\n\ne 0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("probmap parses and validates") {
  const ProbMap pm = read_probmap("probmap v1 2\n1 0.500000000\n2 0.250000000\n");
  REQUIRE(pm.size() == 2);
  CHECK(pm[1] == 0.5);
  CHECK(pm[2] == 0.25);
  CHECK(read_probmap("probmap v1 2\n2 0.25\n1 0.5\n") == pm);
  CHECK(probmap_error("probmap v1 1\n1 1.5\n").starts_with("probability outside [0,1]"));
  CHECK(probmap_error("probmap v1 1\n1 -0.1\n").starts_with("probability outside [0,1]"));
  CHECK(probmap_error("probmap v1 2\n1 0.5\n").starts_with("entry count mismatch"));
  CHECK(probmap_error("probmap v1 1\n1 0.5\n1 0.5\n").find("line 3") != std::string::npos);
  CHECK(probmap_error("probmap v1 1\n3 0.5\n").find("line 2") != std::string::npos);
  CHECK(probmap_error("probmap v2 1\n1 0.5\n") != "no error");
  CHECK_THROWS_AS(ProbMap({0.5, 2.0}), Error);
  CHECK_THROWS_AS(ProbMap({std::nan("")}), Error);
}

TEST_CASE("probmap round trip preserves values to 1e-12") {
  SplitMix64 rng(2024);
  const ProbMap pm = test::random_probmap(100, rng);
  const std::string text = write_probmap(pm);
  CHECK(text.starts_with("probmap v1 100\n1 0."));
  const ProbMap back = read_probmap(text);
  REQUIRE(back.size() == 100);
  double worst = 0.0;
  for (int v = 1; v <= 100; ++v) worst = std::max(worst, std::abs(back[v] - pm[v]));
  CHECK(worst <= 1e-12);
  CHECK(write_probmap(back) == text);
  CHECK(write_probmap(ProbMap({1.0, 0.0})) == "probmap v1 2\n1 1.000000000000000\n2 0.000000000000000\n");
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "domclq_test_io";
  std::filesystem::create_directories(dir);
  const Graph g = test::cycle(6);
  save_dimacs(dir / "c6.dimacs", g);
  CHECK(load_dimacs(dir / "c6.dimacs") == g);
  const ProbMap pm = ProbMap::uniform(6, 0.3);
  save_probmap(dir / "c6.probmap", pm);
  CHECK(load_probmap(dir / "c6.probmap") == pm);
  CHECK_THROWS_AS(load_dimacs(dir / "missing.dimacs"), Error);
  std::filesystem::remove_all(dir);
}
