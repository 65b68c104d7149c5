#pragma once

// Clique decoding from a probability map.
//   fast: one pass over all vertices by descending p (ties by index), keeping
//         a vertex iff it is adjacent to everything kept so far.
//   slow: the same greedy growth started from every vertex in turn (seeds in
//         descending p), restricted to the seed's neighbourhood; the largest
//         clique wins, ties to the lexicographically smallest vertex list.
// The fast pass equals the slow pass's first seed, so |slow| >= |fast|.

#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"

#include <optional>
#include <span>
#include <vector>

namespace domclq {

struct DecodeResult {
  std::vector<Vertex> clique;  // sorted
  std::optional<double> ratio;
};

DecodeResult decode_fast(const Graph& g, const ProbMap& pm);
DecodeResult decode_slow(const Graph& g, const ProbMap& pm);

// |found| / |maximum clique|, using the exact oracle. Throws domclq::Error if
// `found` is not a clique of g.
double approximation_ratio(std::span<const Vertex> found, const Graph& g);

}  // namespace domclq
