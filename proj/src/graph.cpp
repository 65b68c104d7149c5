#include "domclq/graph.hpp"

#include "domclq/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace domclq {

Graph::Graph(int n) : Graph(from_edges(n, {})) {}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw Error("graph order must be non-negative");
  for (auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                  std::to_string(n));
    }
    if (e.u == e.v) throw Error("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  const auto slots = static_cast<std::size_t>(n) + 1;
  g.adjacency_.assign(slots, {});
  g.open_.assign(slots, Bitset(slots));
  for (const auto& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    g.open_[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
    g.open_[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.closed_ = g.open_;
  for (std::size_t v = 1; v < slots; ++v) g.closed_[v].set(v);
  return g;
}

Bitset Graph::all_vertices() const {
  Bitset all(static_cast<std::size_t>(n_) + 1);
  all.fill_from(1);
  return all;
}

}  // namespace domclq
