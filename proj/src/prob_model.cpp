#include "domclq/prob_model.hpp"

#include "domclq/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace domclq {

namespace {

void require_matching(const Graph& g, const ProbMap& pm) {
  if (pm.size() != g.order()) {
    throw Error("probability map has " + std::to_string(pm.size()) + " entries, graph has " +
                std::to_string(g.order()) + " vertices");
  }
}

// ln(1 - x) with the floor applied when x reaches 1.
double log_complement(double x) noexcept {
  if (x >= 1.0) return kLogFloor;
  return std::max(std::log1p(-x), kLogFloor);
}

// -x log2 x with 0 log 0 := 0.
double surprisal_term(double x) noexcept { return x > 0.0 ? -x * std::log2(x) : 0.0; }

double expected_size(const Graph& g, const ProbMap& pm, const ExpectationMode& mode) {
  if (const auto* perm = std::get_if<PermutationExpectation>(&mode)) {
    return permutation_event_expectation(g, pm, perm->order);
  }
  const auto values = pm.values();
  return std::accumulate(values.begin(), values.end(), 0.0);
}

}  // namespace

double clamped_log(double x) noexcept {
  if (!(x > 0.0)) return kLogFloor;
  return std::max(std::log(x), kLogFloor);
}

double subset_probability(const ProbMap& pm, std::span<const Vertex> members) {
  std::vector<bool> in(static_cast<std::size_t>(pm.size()) + 1, false);
  for (Vertex v : members) {
    if (v < 1 || v > pm.size()) throw Error("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  double prob = 1.0;
  for (Vertex v = 1; v <= pm.size(); ++v) prob *= in[static_cast<std::size_t>(v)] ? pm[v] : 1.0 - pm[v];
  return prob;
}

double bernoulli_entropy(double p) noexcept { return surprisal_term(p) + surprisal_term(1.0 - p); }

LogBounds clique_dominate_log_bounds(const Graph& g, const ProbMap& pm) {
  require_matching(g, pm);
  LogBounds bounds;
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (!g.adjacent(i, j)) bounds.clique_log += log_complement(pm[i] * pm[j]);
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    double none_selected = 1.0 - pm[v];
    for (Vertex u : g.neighbors(v)) none_selected *= 1.0 - pm[u];
    bounds.dominate_log += log_complement(none_selected);
  }
  return bounds;
}

double loss_max_clique(const Graph& g, const ProbMap& pm) {
  const auto bounds = clique_dominate_log_bounds(g, pm);
  const double expectation = expected_size(g, pm, PlainExpectation{});
  if (!(expectation > 0.0)) throw Error("max-clique loss needs a positive expected set size");
  return -std::log(expectation) - bounds.clique_log;
}

double loss_dc(const Graph& g, const ProbMap& pm) {
  const auto bounds = clique_dominate_log_bounds(g, pm);
  return -(bounds.dominate_log + bounds.clique_log);
}

double loss_min_dc(const Graph& g, const ProbMap& pm, const ExpectationMode& mode) {
  const double expectation = expected_size(g, pm, mode);
  if (!(expectation > 0.0)) throw Error("min-DC loss needs a positive expected set size");
  return loss_dc(g, pm) + std::log(expectation);
}

double permutation_event_expectation(const Graph& g, const ProbMap& pm, std::span<const Vertex> order) {
  require_matching(g, pm);
  const auto n = static_cast<std::size_t>(g.order());
  if (order.size() != n) throw Error("permutation length does not match the graph order");
  std::vector<std::size_t> position(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 1 || v > g.order() || position[static_cast<std::size_t>(v)] != n) {
      throw Error("order is not a permutation of 1..n");
    }
    position[static_cast<std::size_t>(v)] = i;
  }

  double total = 0.0;
  double earlier_absent = 1.0;  // prod_{j<i} (1 - p_{v_j})
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex vi = order[i];
    double later_non_neighbors_absent = 1.0;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (!g.adjacent(vi, order[k])) later_non_neighbors_absent *= 1.0 - pm[order[k]];
    }
    double conditional_size = 1.0;
    for (Vertex r : g.neighbors(vi)) {
      if (position[static_cast<std::size_t>(r)] > i) conditional_size += pm[r];
    }
    total += pm[vi] * earlier_absent * later_non_neighbors_absent * conditional_size;
    earlier_absent *= 1.0 - pm[vi];
  }
  return total;
}

EntropyScore joint_entropy_fast(std::span<const double> ps) noexcept {
  double sum = 0.0;
  double all_zero = 1.0;
  for (double p : ps) {
    sum += bernoulli_entropy(p);
    all_zero *= 1.0 - p;
  }
  return {sum + surprisal_term(all_zero), EntropyMode::fast};
}

EntropyScore joint_entropy_accurate(const Graph& g, std::span<const double> p_by_vertex,
                                    std::span<const double> entropy_by_vertex, std::span<const Vertex> vars) {
  const std::size_t m = vars.size();
  std::vector<bool> earlier(static_cast<std::size_t>(g.order()) + 1, false);
  double total = 0.0;
  double earlier_absent = 1.0;
  auto prob = [&](Vertex v) { return p_by_vertex[static_cast<std::size_t>(v - 1)]; };

  for (std::size_t i = 0; i < m; ++i) {
    const Vertex xi = vars[i];
    double weight = prob(xi) * earlier_absent;
    for (std::size_t k = i + 1; k < m; ++k) {
      if (!g.adjacent(xi, vars[k])) weight *= 1.0 - prob(vars[k]);
    }
    double neighbor_entropy = 0.0;
    for (Vertex r : g.neighbors(xi)) {
      if (!earlier[static_cast<std::size_t>(r)]) neighbor_entropy += entropy_by_vertex[static_cast<std::size_t>(r - 1)];
    }
    total += surprisal_term(weight) + weight * neighbor_entropy;
    earlier[static_cast<std::size_t>(xi)] = true;
    earlier_absent *= 1.0 - prob(xi);
  }
  return {total, EntropyMode::accurate};
}

EntropyScore joint_entropy_accurate(const Graph& g, std::span<const double> p_by_vertex,
                                    std::span<const Vertex> vars) {
  std::vector<double> entropy(p_by_vertex.size());
  std::transform(p_by_vertex.begin(), p_by_vertex.end(), entropy.begin(), bernoulli_entropy);
  return joint_entropy_accurate(g, p_by_vertex, entropy, vars);
}

EntropyScore joint_entropy_accurate(const Graph& g, const ProbMap& pm, std::span<const Vertex> vars) {
  require_matching(g, pm);
  return joint_entropy_accurate(g, pm.values(), vars);
}

std::vector<double> softmax_reweigh(std::span<const double> values, double temperature) {
  if (values.empty()) throw Error("softmax of an empty list");
  if (!(temperature > 0.0)) throw Error("softmax temperature must be positive");
  const double shift = *std::max_element(values.begin(), values.end());
  std::vector<double> weights(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    weights[i] = std::exp((values[i] - shift) / temperature);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return weights;
}

}  // namespace domclq
