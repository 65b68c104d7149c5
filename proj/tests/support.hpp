#pragma once

// Small graphs and helpers shared by the test binaries.

#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"
#include "domclq/rng.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace domclq::test {

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph::from_edges(n, edges);
}

inline Graph two_k2() { return Graph::from_edges(4, {{1, 2}, {3, 4}}); }

inline ProbMap random_probmap(int n, SplitMix64& rng) {
  std::vector<double> p(static_cast<std::size_t>(n));
  for (auto& x : p) x = rng.uniform();
  return ProbMap(std::move(p));
}

inline std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return order;
}

// Every subset of [n] as a sorted vertex list, indexed by bitmask.
inline std::vector<Vertex> mask_members(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 1; v <= n; ++v)
    if (mask >> (v - 1) & 1U) out.push_back(v);
  return out;
}

}  // namespace domclq::test
