#include "domclq/error.hpp"
#include "domclq/graph.hpp"
#include "domclq/rng.hpp"

#include <string>

namespace domclq {

Graph gnp_generate(int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error("G(n,p) requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0,1], got " + std::to_string(p));

  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (rng.uniform() < p) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace domclq
