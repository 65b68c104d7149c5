#include "domclq/greedy.hpp"

#include "domclq/error.hpp"
#include "domclq/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace domclq {

namespace {

std::vector<Vertex> by_descending_probability(const Graph& g, const ProbMap& pm) {
  if (pm.size() != g.order()) throw Error("probability map does not match the graph order");
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return pm[a] > pm[b]; });
  return order;
}

// Greedy growth: scan `order`, keep a vertex iff adjacent to all kept ones.
std::vector<Vertex> grow(const Graph& g, std::span<const Vertex> order, std::vector<Vertex> clique) {
  for (Vertex v : order) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); })) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

DecodeResult decode_fast(const Graph& g, const ProbMap& pm) {
  const auto order = by_descending_probability(g, pm);
  return {grow(g, order, {}), std::nullopt};
}

DecodeResult decode_slow(const Graph& g, const ProbMap& pm) {
  const auto order = by_descending_probability(g, pm);
  std::vector<Vertex> best;
  for (Vertex seed : order) {
    auto clique = grow(g, order, {seed});
    if (clique.size() > best.size() || (clique.size() == best.size() && clique < best)) best = std::move(clique);
  }
  return {std::move(best), std::nullopt};
}

double approximation_ratio(std::span<const Vertex> found, const Graph& g) {
  if (!oracle::is_clique(g, found)) throw Error("decoded set is not a clique");
  const auto optimum = oracle::exact_max_clique(g);
  if (optimum.size == 0) throw Error("graph has no vertices");
  return static_cast<double>(found.size()) / static_cast<double>(optimum.size);
}

}  // namespace domclq
