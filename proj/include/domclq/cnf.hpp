#pragma once

#include "domclq/graph.hpp"

#include <span>
#include <vector>

namespace domclq {

// Dominating-clique CNF: variable X_j selects v_j, and clause C_i = {X_j : v_j in N[v_i]}
// demands that v_i is selected or has a selected neighbor.
struct CnfInstance {
  int variables = 0;
  std::vector<std::vector<Vertex>> clauses;  // clauses[i - 1] is C_i, sorted ascending

  std::span<const Vertex> clause(int i) const noexcept { return clauses[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

CnfInstance encode_cnf(const Graph& g);

}  // namespace domclq
