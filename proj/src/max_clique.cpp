#include "domclq/error.hpp"
#include "domclq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace domclq::oracle {

namespace {

// MCQ-style branch and bound (Tomita & Seki): candidates are greedily
// coloured and visited in reverse colour order; a branch is cut when
// |current| + colour <= |best|.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g)
      : n_(g.order()), adj_(static_cast<std::size_t>(n_) + 1, std::vector<char>(static_cast<std::size_t>(n_) + 1, 0)) {
    for (const auto& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
      adj_[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  VertexList run() {
    if (n_ == 0) return {};
    std::vector<Vertex> current;
    expand(current, order_);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }

  void colour(const std::vector<Vertex>& candidates, std::vector<Vertex>& ordered, std::vector<int>& colours) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const std::vector<Vertex>& cls) {
        return std::none_of(cls.begin(), cls.end(), [&](Vertex u) { return adjacent(u, v); });
      });
      if (it == classes.end()) {
        classes.emplace_back();
        it = std::prev(classes.end());
      }
      it->push_back(v);
    }
    ordered.clear();
    colours.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (Vertex v : classes[k]) {
        ordered.push_back(v);
        colours.push_back(static_cast<int>(k) + 1);
      }
    }
  }

  void expand(std::vector<Vertex>& current, const std::vector<Vertex>& candidates) {
    std::vector<Vertex> ordered;
    std::vector<int> colours;
    colour(candidates, ordered, colours);
    for (std::size_t idx = ordered.size(); idx-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colours[idx]) <= best_.size()) return;
      const Vertex v = ordered[idx];
      current.push_back(v);
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < idx; ++j) {
        if (adjacent(v, ordered[j])) next.push_back(ordered[j]);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
    }
  }

  int n_;
  std::vector<std::vector<char>> adj_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_;
};

}  // namespace

MaxClique exact_max_clique(const Graph& g) {
  if (g.order() > kMaxCliqueLimit) {
    throw GuardError("exact max clique refuses n=" + std::to_string(g.order()) + " (limit " +
                     std::to_string(kMaxCliqueLimit) + ")");
  }
  MaxClique result;
  result.clique = MaxCliqueSearch(g).run();
  result.size = static_cast<int>(result.clique.size());
  return result;
}

}  // namespace domclq::oracle
