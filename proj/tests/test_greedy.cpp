#include "domclq/error.hpp"
#include "domclq/greedy.hpp"
#include "domclq/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace domclq;

namespace {

// Triangle {2, 4, 6} with a pendant path through the other vertices.
Graph planted_triangle() { return Graph::from_edges(6, {{2, 4}, {2, 6}, {4, 6}, {1, 2}, {1, 3}, {3, 4}, {5, 6}, {3, 5}}); }

}  // namespace

TEST_CASE("decoders recover a planted triangle") {
  const Graph g = planted_triangle();
  const ProbMap pm({0.0, 1.0, 0.0, 1.0, 0.0, 1.0});
  CHECK(decode_fast(g, pm).clique == std::vector<Vertex>{2, 4, 6});
  CHECK(decode_slow(g, pm).clique == std::vector<Vertex>{2, 4, 6});
}

TEST_CASE("decoder corner cases") {
  const Graph k5 = test::complete(5);
  CHECK(decode_fast(k5, ProbMap::uniform(5, 0.5)).clique == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(decode_slow(k5, ProbMap::uniform(5, 0.5)).clique == std::vector<Vertex>{1, 2, 3, 4, 5});
  const ProbMap pm({0.1, 0.7, 0.3, 0.7});
  CHECK(decode_fast(Graph(4), pm).clique == std::vector<Vertex>{2});
  // Every seed yields a singleton; equal sizes go to the smallest vertex list.
  CHECK(decode_slow(Graph(4), pm).clique == std::vector<Vertex>{1});
  CHECK(decode_slow(test::cycle(6), ProbMap::uniform(6, 0.5)).clique.size() == 2);
  CHECK(decode_fast(test::cycle(6), ProbMap::uniform(6, 0.5)).clique.size() == 2);
}

TEST_CASE("approximation ratio") {
  const Graph k3 = test::complete(3);
  const std::vector<Vertex> all{1, 2, 3}, pair{1, 2}, bad{1, 3};
  CHECK(approximation_ratio(all, k3) == 1.0);
  std::vector<Edge> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
  const Graph k4_tail = Graph::from_edges(6, edges);
  CHECK(approximation_ratio(pair, k4_tail) == 0.5);
  CHECK_THROWS_AS(approximation_ratio(bad, test::path(3)), Error);
}

TEST_CASE("decoders return cliques and slow is never smaller than fast") {
  SplitMix64 rng(88);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng.below(60));
    const Graph g = gnp_generate(n, rng.uniform(), rng.next());
    const ProbMap pm = test::random_probmap(n, rng);
    const auto fast = decode_fast(g, pm);
    const auto slow = decode_slow(g, pm);
    CHECK(oracle::is_clique(g, fast.clique));
    CHECK(oracle::is_clique(g, slow.clique));
    CHECK_FALSE(fast.clique.empty());
    CHECK(slow.clique.size() >= fast.clique.size());
    const double r = approximation_ratio(slow.clique, g);
    CHECK(r > 0.0);
    CHECK(r <= 1.0);
  }
}
