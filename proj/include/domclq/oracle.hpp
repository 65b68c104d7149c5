#pragma once

// Brute-force ground truth. These routines enumerate subsets directly and do
// not share code with the search solver; they exist to check it.

#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"

#include <optional>
#include <span>
#include <vector>

namespace domclq::oracle {

inline constexpr int kEnumerationLimit = 25;
inline constexpr int kProbabilityLimit = 20;
inline constexpr int kPermutationEventLimit = 15;
inline constexpr int kMaxCliqueLimit = 200;

using VertexList = std::vector<Vertex>;  // sorted ascending

// Independent checkers over adjacency lists. The empty set and singletons are
// cliques; the empty set dominates only the empty graph.
bool is_clique(const Graph& g, std::span<const Vertex> set);
bool is_dominating(const Graph& g, std::span<const Vertex> set);
bool is_dominating_clique(const Graph& g, std::span<const Vertex> set);

struct DcEnumeration {
  std::vector<VertexList> cliques;  // ordered by subset bitmask
  std::optional<int> min_size;
};

// Throws GuardError for n > kEnumerationLimit.
DcEnumeration enumerate_dominating_cliques(const Graph& g);

enum class EventKind { clique, dominating, dominating_clique, custom };

// A family of vertex subsets. For kind == custom the family is `members`
// (each a sorted vertex list). complement selects every subset not in the family.
struct EventPredicate {
  EventKind kind = EventKind::clique;
  bool complement = false;
  std::vector<VertexList> members;
};

// sum of P(S) over all S in the event. Throws GuardError for n > kProbabilityLimit.
double exact_event_probability(const Graph& g, const ProbMap& pm, const EventPredicate& pred);

struct Monotonicity {
  bool increasing = false;  // closed under supersets
  bool decreasing = false;  // closed under subsets
};

// Throws GuardError for n > kProbabilityLimit.
Monotonicity classify_event(const Graph& g, const EventPredicate& pred);

// Materializes the permutation event by filtering all 2^n subsets step by step.
// Throws GuardError for n > kPermutationEventLimit.
std::vector<VertexList> event_from_permutation(const Graph& g, std::span<const Vertex> order);

// sum over the listed subsets of P(S) |S|.
double event_size_expectation(const ProbMap& pm, std::span<const VertexList> event);

struct MaxClique {
  VertexList clique;
  int size = 0;
};

// Branch and bound with a greedy colouring bound. Throws GuardError for
// n > kMaxCliqueLimit.
MaxClique exact_max_clique(const Graph& g);

}  // namespace domclq::oracle
