#include "domclq/cnf.hpp"
#include "domclq/error.hpp"
#include "domclq/graph.hpp"
#include "domclq/rng.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace domclq;

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xe220a8397b1dcdafULL);
  SplitMix64 rng(42);
  CHECK(rng.next() == 0xbdd732262feb6e95ULL);
  CHECK(splitmix64_hash(42) == 0xbdd732262feb6e95ULL);
}

TEST_CASE("uniform draws lie in [0, 1) and below() in range") {
  SplitMix64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(7) < 7);
  }
}

TEST_CASE("graph construction normalizes and rejects bad edges") {
  const Graph g = Graph::from_edges(4, {{3, 1}, {2, 1}, {4, 3}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{1, 2});
  CHECK(g.edges()[1] == Edge{1, 3});
  CHECK(g.edges()[2] == Edge{3, 4});
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.degree(1) == 2);
  CHECK(std::vector<Vertex>(g.neighbors(3).begin(), g.neighbors(3).end()) == std::vector<Vertex>{1, 4});
  CHECK(g.closed_neighborhood(4).to_vector() == std::vector<int>{3, 4});
  CHECK(g.open_neighborhood(4).to_vector() == std::vector<int>{3});
  CHECK(g.all_vertices().to_vector() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 2}}), Error);
}

TEST_CASE("gnp trivial densities") {
  const Graph k3 = gnp_generate(3, 1.0, 123);
  CHECK(k3 == test::complete(3));
  const Graph empty = gnp_generate(5, 0.0, 77);
  CHECK(empty.order() == 5);
  CHECK(empty.edge_count() == 0);
  CHECK_THROWS_AS(gnp_generate(5, 1.5, 1), Error);
  CHECK_THROWS_AS(gnp_generate(5, -0.1, 1), Error);
  CHECK_THROWS_AS(gnp_generate(0, 0.5, 1), Error);
}

TEST_CASE("gnp reproduces the reference trace for seed 42") {
  // Computed independently from the documented stream: pairs in
  // lexicographic order, kept iff (next() >> 11) * 2^-53 < p.
  const std::vector<Edge> expected{{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 8}, {2, 4}, {2, 6},
                                   {3, 6}, {3, 7}, {4, 5}, {4, 8}, {5, 8}, {6, 7}};
  const Graph g = gnp_generate(8, 0.381966, 42);
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(gnp_generate(8, 0.381966, 42) == g);
}

TEST_CASE("gnp mean edge count is within 3 sigma of the binomial mean") {
  const int n = 20;
  const double p = 0.3;
  const int seeds = 1000;
  const double pairs = n * (n - 1) / 2.0;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) total += static_cast<double>(gnp_generate(n, p, static_cast<std::uint64_t>(s)).edge_count());
  const double mean = total / seeds;
  const double sigma = std::sqrt(pairs * p * (1 - p) / seeds);
  CHECK(std::abs(mean - p * pairs) <= 3 * sigma);
}

TEST_CASE("cnf encoding") {
  const auto k3 = encode_cnf(test::complete(3));
  CHECK(k3.variables == 3);
  for (int i = 1; i <= 3; ++i) CHECK(std::vector<Vertex>(k3.clause(i).begin(), k3.clause(i).end()) == std::vector<Vertex>{1, 2, 3});

  const auto p3 = encode_cnf(test::path(3));
  CHECK(p3.clauses == std::vector<std::vector<Vertex>>{{1, 2}, {1, 2, 3}, {2, 3}});

  const auto iso = encode_cnf(Graph::from_edges(3, {{1, 2}}));
  CHECK(iso.clauses[2] == std::vector<Vertex>{3});
}

TEST_CASE("cnf clause sizes sum to n + 2|E|") {
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const Graph g = gnp_generate(n, rng.uniform(), rng.next());
    const auto cnf = encode_cnf(g);
    std::size_t total = 0;
    for (int i = 1; i <= n; ++i) {
      const auto c = cnf.clause(i);
      total += c.size();
      CHECK(std::find(c.begin(), c.end(), i) != c.end());
      CHECK(static_cast<int>(c.size()) == g.degree(i) + 1);
      CHECK(std::is_sorted(c.begin(), c.end()));
    }
    CHECK(total == static_cast<std::size_t>(n) + 2 * g.edge_count());
  }
}
