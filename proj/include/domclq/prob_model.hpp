#pragma once

// Product Bernoulli measure over vertex subsets: each vertex v is in the
// random set S independently with probability p_v. Everything here is a pure
// function of its arguments.

#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"

#include <span>
#include <variant>
#include <vector>

namespace domclq {

// ln(0) is replaced by this floor so that losses stay finite.
inline constexpr double kLogFloor = -1e9;

double clamped_log(double x) noexcept;

// P(S = members) = prod_{i in S} p_i * prod_{j not in S} (1 - p_j).
double subset_probability(const ProbMap& pm, std::span<const Vertex> members);

// Binary entropy in bits, 0 log 0 := 0.
double bernoulli_entropy(double p) noexcept;

// Logs of the correlation-inequality bounds:
//   clique_log   = sum over non-edges {i,j} of ln(1 - p_i p_j)         (<= ln P(S is a clique))
//   dominate_log = sum over v of ln(1 - prod_{u in N[v]} (1 - p_u))   (<= ln P(S dominates))
struct LogBounds {
  double clique_log = 0.0;
  double dominate_log = 0.0;
};

LogBounds clique_dominate_log_bounds(const Graph& g, const ProbMap& pm);

// -ln(sum p) - clique_log. Throws domclq::Error if sum p == 0.
double loss_max_clique(const Graph& g, const ProbMap& pm);

// -(dominate_log + clique_log).
double loss_dc(const Graph& g, const ProbMap& pm);

struct PlainExpectation {};
struct PermutationExpectation {
  std::vector<Vertex> order;
};
using ExpectationMode = std::variant<PlainExpectation, PermutationExpectation>;

// loss_dc + ln E|S|, where E|S| is sum p (plain) or the expectation restricted
// to the permutation event. Throws domclq::Error if E|S| <= 0.
double loss_min_dc(const Graph& g, const ProbMap& pm, const ExpectationMode& mode);

// sum over the permutation event of P(S)|S|. For order (v_1..v_n) the event
// is the disjoint union over i of {S : v_i in S, S subset of N[v_i] minus {v_1..v_{i-1}}}.
double permutation_event_expectation(const Graph& g, const ProbMap& pm, std::span<const Vertex> order);

enum class EntropyMode { fast, accurate };

struct EntropyScore {
  double value = 0.0;  // bits, >= 0
  EntropyMode mode = EntropyMode::fast;
};

// sum_i H(p_i) - q log2 q with q = prod_i (1 - p_i).
EntropyScore joint_entropy_fast(std::span<const double> ps) noexcept;

// For vars (x_1..x_m) in the given order:
//   sum_i w_i (-log2 w_i + sum_{r in N(x_i) \ {x_1..x_{i-1}}} H(p_r))
//   w_i = p_{x_i} prod_{j<i} (1 - p_{x_j}) prod_{k>i, x_k not in N(x_i)} (1 - p_{x_k})
// p_by_vertex[v - 1] is the probability of vertex v.
EntropyScore joint_entropy_accurate(const Graph& g, std::span<const double> p_by_vertex,
                                    std::span<const Vertex> vars);
EntropyScore joint_entropy_accurate(const Graph& g, const ProbMap& pm, std::span<const Vertex> vars);
// Same, with H(p_v) supplied as entropy_by_vertex[v - 1].
EntropyScore joint_entropy_accurate(const Graph& g, std::span<const double> p_by_vertex,
                                    std::span<const double> entropy_by_vertex, std::span<const Vertex> vars);

// exp(v_i / T) / sum_j exp(v_j / T). Throws on empty input or T <= 0.
std::vector<double> softmax_reweigh(std::span<const double> values, double temperature = 1.0);

}  // namespace domclq
