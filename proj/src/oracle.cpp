#include "domclq/oracle.hpp"

#include "domclq/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace domclq::oracle {

namespace {

using Mask = std::uint32_t;

void guard(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw GuardError(std::string(what) + " is exponential; refusing n=" + std::to_string(g.order()) +
                     " (limit " + std::to_string(limit) + ")");
  }
}

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

// Open and closed neighbourhood masks built from the adjacency lists.
struct MaskGraph {
  int n;
  std::vector<Mask> open;
  std::vector<Mask> closed;

  explicit MaskGraph(const Graph& g) : n(g.order()), open(static_cast<std::size_t>(n) + 1, 0), closed(open) {
    for (Vertex v = 1; v <= n; ++v) {
      for (Vertex u : g.neighbors(v)) open[static_cast<std::size_t>(v)] |= bit(u);
      closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)] | bit(v);
    }
  }

  bool clique(Mask s) const {
    for (Vertex v = 1; v <= n; ++v) {
      if ((s & bit(v)) && (s & ~closed[static_cast<std::size_t>(v)])) return false;
    }
    return true;
  }

  bool dominating(Mask s) const {
    for (Vertex v = 1; v <= n; ++v) {
      if ((s & closed[static_cast<std::size_t>(v)]) == 0) return false;
    }
    return true;
  }
};

Mask to_mask(std::span<const Vertex> set) {
  Mask m = 0;
  for (Vertex v : set) m |= bit(v);
  return m;
}

VertexList to_list(Mask m, int n) {
  VertexList out;
  for (Vertex v = 1; v <= n; ++v) {
    if (m & bit(v)) out.push_back(v);
  }
  return out;
}

double mask_probability(const ProbMap& pm, Mask s) {
  double prob = 1.0;
  for (Vertex v = 1; v <= pm.size(); ++v) prob *= (s & bit(v)) ? pm[v] : 1.0 - pm[v];
  return prob;
}

class EventTest {
 public:
  EventTest(const Graph& g, const EventPredicate& pred) : graph_(g), pred_(pred) {
    if (pred.kind == EventKind::custom) {
      for (const auto& member : pred.members) custom_.push_back(to_mask(member));
      std::sort(custom_.begin(), custom_.end());
    }
  }

  bool operator()(Mask s) const {
    bool in = false;
    switch (pred_.kind) {
      case EventKind::clique: in = graph_.clique(s); break;
      case EventKind::dominating: in = graph_.dominating(s); break;
      case EventKind::dominating_clique: in = graph_.clique(s) && graph_.dominating(s); break;
      case EventKind::custom: in = std::binary_search(custom_.begin(), custom_.end(), s); break;
    }
    return in != pred_.complement;
  }

 private:
  MaskGraph graph_;
  const EventPredicate& pred_;
  std::vector<Mask> custom_;
};

}  // namespace

bool is_clique(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      const auto nb = g.neighbors(set[a]);
      if (!std::binary_search(nb.begin(), nb.end(), set[b])) return false;
    }
  }
  return true;
}

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    bool covered = std::find(set.begin(), set.end(), v) != set.end();
    for (std::size_t k = 0; !covered && k < set.size(); ++k) {
      const auto nb = g.neighbors(v);
      covered = std::binary_search(nb.begin(), nb.end(), set[k]);
    }
    if (!covered) return false;
  }
  return true;
}

bool is_dominating_clique(const Graph& g, std::span<const Vertex> set) {
  return is_clique(g, set) && is_dominating(g, set);
}

DcEnumeration enumerate_dominating_cliques(const Graph& g) {
  guard(g, kEnumerationLimit, "dominating-clique enumeration");
  const MaskGraph mg(g);
  DcEnumeration result;
  const Mask end = Mask{1} << g.order();
  for (Mask s = 1; s < end; ++s) {
    if (!mg.dominating(s) || !mg.clique(s)) continue;
    auto list = to_list(s, g.order());
    const int size = static_cast<int>(list.size());
    if (!result.min_size || size < *result.min_size) result.min_size = size;
    result.cliques.push_back(std::move(list));
  }
  return result;
}

double exact_event_probability(const Graph& g, const ProbMap& pm, const EventPredicate& pred) {
  guard(g, kProbabilityLimit, "exact event probability");
  if (pm.size() != g.order()) throw Error("probability map does not match the graph");
  const EventTest test(g, pred);
  double total = 0.0;
  const Mask end = Mask{1} << g.order();
  for (Mask s = 0; s < end; ++s) {
    if (test(s)) total += mask_probability(pm, s);
  }
  return total;
}

Monotonicity classify_event(const Graph& g, const EventPredicate& pred) {
  guard(g, kProbabilityLimit, "event classification");
  const EventTest test(g, pred);
  Monotonicity m{true, true};
  const Mask end = Mask{1} << g.order();
  for (Mask s = 0; s < end; ++s) {
    if (!test(s)) continue;
    for (Vertex v = 1; v <= g.order(); ++v) {
      const Mask flipped = s ^ bit(v);
      if (!test(flipped)) {
        if (s & bit(v)) m.decreasing = false;  // a subset of a member is missing
        else m.increasing = false;             // a superset of a member is missing
      }
    }
  }
  return m;
}

std::vector<VertexList> event_from_permutation(const Graph& g, std::span<const Vertex> order) {
  guard(g, kPermutationEventLimit, "permutation event");
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw Error("permutation length does not match the graph order");
  Mask seen = 0;
  for (Vertex v : order) {
    if (v < 1 || v > n || (seen & bit(v))) throw Error("order is not a permutation of 1..n");
    seen |= bit(v);
  }

  const MaskGraph mg(g);
  std::vector<VertexList> event;
  Mask earlier = 0;
  for (Vertex vi : order) {
    std::vector<Mask> remaining;
    for (Mask s = 0; s < (Mask{1} << n); ++s) remaining.push_back(s);
    std::erase_if(remaining, [&](Mask s) { return (s & earlier) != 0; });
    std::erase_if(remaining, [&](Mask s) { return (s & bit(vi)) == 0; });
    const Mask non_adjacent = ~mg.closed[static_cast<std::size_t>(vi)];
    std::erase_if(remaining, [&](Mask s) { return (s & non_adjacent) != 0; });
    for (Mask s : remaining) event.push_back(to_list(s, n));
    earlier |= bit(vi);
  }
  return event;
}

double event_size_expectation(const ProbMap& pm, std::span<const VertexList> event) {
  double total = 0.0;
  for (const auto& s : event) total += mask_probability(pm, to_mask(s)) * static_cast<double>(s.size());
  return total;
}

}  // namespace domclq::oracle
