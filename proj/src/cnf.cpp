#include "domclq/cnf.hpp"

#include <algorithm>

namespace domclq {

CnfInstance encode_cnf(const Graph& g) {
  CnfInstance cnf;
  cnf.variables = g.order();
  cnf.clauses.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::vector<Vertex> clause(g.neighbors(v).begin(), g.neighbors(v).end());
    clause.insert(std::upper_bound(clause.begin(), clause.end(), v), v);
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

}  // namespace domclq
