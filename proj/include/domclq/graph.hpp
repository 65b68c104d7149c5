#pragma once

#include "domclq/bitset.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace domclq {

// Vertices are numbered 1..n everywhere, as in DIMACS files.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph. Edges are stored normalized (u < v) and sorted;
// adjacency is kept both as sorted lists and as bitsets. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws domclq::Error on self-loops, duplicate edges or out-of-range ends.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return open_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }

  // N(v) and N[v] as vertex bitsets of order() + 1 bits.
  const Bitset& open_neighborhood(Vertex v) const noexcept { return open_[static_cast<std::size_t>(v)]; }
  const Bitset& closed_neighborhood(Vertex v) const noexcept { return closed_[static_cast<std::size_t>(v)]; }

  // Bitset of order() + 1 bits with every vertex set.
  Bitset all_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
  std::vector<Bitset> open_;
  std::vector<Bitset> closed_;
};

// G(n, p): pairs (i, j), i < j, are visited in lexicographic order and each is
// kept iff the next SplitMix64(seed).uniform() draw is < p.
Graph gnp_generate(int n, double p, std::uint64_t seed);

}  // namespace domclq
