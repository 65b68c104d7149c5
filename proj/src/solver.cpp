#include "domclq/solver.hpp"

#include "domclq/error.hpp"
#include "domclq/prob_model.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace domclq {

std::string_view heuristic_name(Heuristic h) noexcept {
  switch (h) {
    case Heuristic::mrv: return "mrv";
    case Heuristic::entropy_fast: return "ent-fast";
    case Heuristic::entropy_accurate: return "ent-acc";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) noexcept {
  if (name == "mrv") return Heuristic::mrv;
  if (name == "ent-fast") return Heuristic::entropy_fast;
  if (name == "ent-acc") return Heuristic::entropy_accurate;
  return std::nullopt;
}

SearchState SearchState::initial(const Graph& g) {
  SearchState state;
  state.candidates = g.all_vertices();
  state.unsatisfied = g.all_vertices();
  return state;
}

namespace {

void validate_selector(const Graph& g, const BranchSelector& sel) {
  if (sel.policy == Heuristic::mrv) return;
  if (!sel.probmap) throw Error(std::string(heuristic_name(sel.policy)) + " needs a probability map");
  if (sel.probmap->size() != g.order()) throw Error("probability map does not match the graph order");
  if (!(sel.temperature > 0.0)) throw Error("softmax temperature must be positive");
}

// Per-node scoring scratch. prepare() must be called for the node before
// scoring or listing variables.
class NodeScorer {
 public:
  NodeScorer(const Graph& g, const BranchSelector& sel, VarOrder order)
      : g_(g),
        sel_(sel),
        order_(order),
        n_(static_cast<std::size_t>(g.order())),
        weight_(n_, 0.0),
        entropy_(n_, 0.0),
        unsatisfied_count_(n_ + 1, 0),
        scratch_(n_ + 1) {}

  void prepare(const Bitset& candidates, const Bitset& unsatisfied) {
    candidates_ = &candidates;
    if (sel_.policy != Heuristic::mrv) {
      for (Vertex v : active_) weight_[static_cast<std::size_t>(v - 1)] = entropy_[static_cast<std::size_t>(v - 1)] = 0.0;
      active_.clear();
      candidates.for_each([&](std::size_t v) { active_.push_back(static_cast<Vertex>(v)); });
      if (!active_.empty()) {
        values_.clear();
        for (Vertex v : active_) values_.push_back((*sel_.probmap)[v]);
        const auto w = softmax_reweigh(values_, sel_.temperature);
        for (std::size_t k = 0; k < active_.size(); ++k) {
          const auto idx = static_cast<std::size_t>(active_[k] - 1);
          weight_[idx] = w[k];
          entropy_[idx] = bernoulli_entropy(w[k]);
        }
      }
    }
    if (order_ == VarOrder::most_unsatisfied) {
      candidates.for_each([&](std::size_t v) {
        unsatisfied_count_[v] = unsatisfied.count_and(g_.closed_neighborhood(static_cast<Vertex>(v)));
      });
    }
  }

  std::vector<Vertex> variables(int clause) {
    scratch_.assign_and(g_.closed_neighborhood(clause), *candidates_);
    std::vector<Vertex> vars;
    scratch_.for_each([&](std::size_t v) { vars.push_back(static_cast<Vertex>(v)); });
    if (order_ == VarOrder::most_unsatisfied) {
      std::stable_sort(vars.begin(), vars.end(), [&](Vertex a, Vertex b) {
        return unsatisfied_count_[static_cast<std::size_t>(a)] > unsatisfied_count_[static_cast<std::size_t>(b)];
      });
    }
    return vars;
  }

  double score(int clause) {
    switch (sel_.policy) {
      case Heuristic::mrv:
        return static_cast<double>(g_.closed_neighborhood(clause).count_and(*candidates_));
      case Heuristic::entropy_fast: {
        probs_.clear();
        for (Vertex v : variables(clause)) probs_.push_back(weight_[static_cast<std::size_t>(v - 1)]);
        return joint_entropy_fast(probs_).value;
      }
      case Heuristic::entropy_accurate:
        return joint_entropy_accurate(g_, weight_, entropy_, variables(clause)).value;
    }
    return 0.0;
  }

  int select(const Bitset& unsatisfied) {
    int dead = 0;
    unsatisfied.for_each([&](std::size_t c) {
      if (dead == 0 && !g_.closed_neighborhood(static_cast<Vertex>(c)).intersects(*candidates_)) {
        dead = static_cast<int>(c);
      }
    });
    if (dead != 0) return dead;

    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    unsatisfied.for_each([&](std::size_t c) {
      const double s = score(static_cast<int>(c));
      if (s < best_score) {
        best_score = s;
        best = static_cast<int>(c);
      }
    });
    return best;
  }

 private:
  const Graph& g_;
  const BranchSelector& sel_;
  VarOrder order_;
  std::size_t n_;
  const Bitset* candidates_ = nullptr;
  std::vector<Vertex> active_;
  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> weight_;   // softmax weight of v in S, else 0
  std::vector<double> entropy_;  // H(weight)
  std::vector<std::size_t> unsatisfied_count_;
  Bitset scratch_;
};

void check_state(const Graph& g, const std::vector<Vertex>& clique, const Bitset& candidates,
                 const Bitset& unsatisfied) {
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      if (!g.adjacent(clique[a], clique[b])) throw Error("invariant violated: D is not a clique");
    }
  }
  candidates.for_each([&](std::size_t s) {
    for (Vertex d : clique) {
      if (static_cast<Vertex>(s) == d || !g.adjacent(static_cast<Vertex>(s), d)) {
        throw Error("invariant violated: S holds a variable not adjacent to all of D");
      }
    }
  });
  for (Vertex v = 1; v <= g.order(); ++v) {
    const bool dominated = std::any_of(clique.begin(), clique.end(), [&](Vertex d) { return d == v || g.adjacent(d, v); });
    if (unsatisfied.test(static_cast<std::size_t>(v)) == dominated) {
      throw Error("invariant violated: U does not match the vertices left undominated by D");
    }
  }
}

// U minus the clauses containing X_x, computed clause by clause from the CNF.
void check_clause_removal(const CnfInstance& cnf, const Bitset& before, const Bitset& after, Vertex x) {
  Bitset expected = before;
  before.for_each([&](std::size_t c) {
    const auto clause = cnf.clause(static_cast<int>(c));
    if (std::binary_search(clause.begin(), clause.end(), x)) expected.reset(c);
  });
  if (!(expected == after)) throw Error("invariant violated: clause removal disagrees with the CNF");
}

struct Frame {
  Bitset remaining;  // S''
  Bitset child_candidates;
  Bitset child_unsatisfied;
};

class Search {
 public:
  Search(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel, VarOrder order, const SolveOptions& options)
      : cnf_(cnf), g_(g), scorer_(g, sel, order), options_(options) {
    const auto bits = static_cast<std::size_t>(g.order()) + 1;
    frames_.assign(bits + 1, Frame{Bitset(bits), Bitset(bits), Bitset(bits)});
  }

  SolveReport run_existence() {
    const auto start = std::chrono::steady_clock::now();
    const Bitset all = g_.all_vertices();
    report_.outcome = exists(0, all, all) ? Outcome::found : Outcome::not_found;
    finish(start);
    return report_;
  }

  SolveReport run_minimum(bool backjumping) {
    const auto start = std::chrono::steady_clock::now();
    backjumping_ = backjumping;
    const Bitset all = g_.all_vertices();
    minimum(0, all, all);
    if (incumbent_) {
      report_.outcome = Outcome::found;
      report_.solution = *incumbent_;
      report_.min_size = static_cast<int>(incumbent_->size());
    }
    finish(start);
    return report_;
  }

 private:
  static constexpr int kImprovementUnwind = 3;
  static constexpr int kDepthCutoffUnwind = 2;

  void finish(std::chrono::steady_clock::time_point start) {
    std::sort(report_.solution.begin(), report_.solution.end());
    report_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  }

  // Assigns X_x = 1 under `frame`, filling the child's S' and U'.
  void assign(Frame& frame, const Bitset& unsatisfied, Vertex x) {
    ++report_.branches;
    clique_.push_back(x);
    frame.child_candidates.assign_and(frame.remaining, g_.open_neighborhood(x));
    frame.child_unsatisfied.assign_andnot(unsatisfied, g_.closed_neighborhood(x));
    if (options_.check_invariants) check_clause_removal(cnf_, unsatisfied, frame.child_unsatisfied, x);
  }

  void retract(Frame& frame, Vertex x) {
    clique_.pop_back();
    frame.remaining.reset(static_cast<std::size_t>(x));
  }

  std::vector<Vertex> branch_on(const Bitset& candidates, const Bitset& unsatisfied) {
    scorer_.prepare(candidates, unsatisfied);
    return scorer_.variables(scorer_.select(unsatisfied));
  }

  bool exists(std::size_t depth, const Bitset& candidates, const Bitset& unsatisfied) {
    ++report_.nodes;
    if (options_.check_invariants) check_state(g_, clique_, candidates, unsatisfied);
    if (unsatisfied.none()) {
      report_.solution = clique_;
      return true;
    }
    const auto vars = branch_on(candidates, unsatisfied);
    Frame& frame = frames_[depth];
    frame.remaining = candidates;
    for (Vertex x : vars) {
      assign(frame, unsatisfied, x);
      if (exists(depth + 1, frame.child_candidates, frame.child_unsatisfied)) return true;
      retract(frame, x);
    }
    return false;
  }

  // Returns the number of levels still to unwind, counting this one.
  int minimum(std::size_t depth, const Bitset& candidates, const Bitset& unsatisfied) {
    ++report_.nodes;
    if (options_.check_invariants) check_state(g_, clique_, candidates, unsatisfied);
    if (unsatisfied.none()) {
      if (incumbent_ && clique_.size() >= incumbent_->size()) return 0;
      incumbent_ = clique_;
      if (!backjumping_) return 0;
      ++report_.backjumps;
      return kImprovementUnwind;
    }
    if (incumbent_ && clique_.size() >= incumbent_->size()) {
      if (!backjumping_) return 0;
      ++report_.backjumps;
      return kDepthCutoffUnwind;
    }
    const auto vars = branch_on(candidates, unsatisfied);
    Frame& frame = frames_[depth];
    frame.remaining = candidates;
    for (Vertex x : vars) {
      assign(frame, unsatisfied, x);
      const int unwind = minimum(depth + 1, frame.child_candidates, frame.child_unsatisfied);
      retract(frame, x);
      if (unwind > 1) return unwind - 1;
    }
    return 0;
  }

  const CnfInstance& cnf_;
  const Graph& g_;
  NodeScorer scorer_;
  SolveOptions options_;
  std::vector<Frame> frames_;
  std::vector<Vertex> clique_;
  std::optional<std::vector<Vertex>> incumbent_;
  bool backjumping_ = false;
  SolveReport report_;
};

void validate_instance(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel) {
  if (!(cnf == encode_cnf(g))) throw Error("CNF instance does not encode this graph");
  validate_selector(g, sel);
}

}  // namespace

int select_branch_clause(const Graph& g, const SearchState& state, const BranchSelector& sel, VarOrder order) {
  validate_selector(g, sel);
  if (state.unsatisfied.none()) throw Error("no unsatisfied clause to branch on");
  NodeScorer scorer(g, sel, order);
  scorer.prepare(state.candidates, state.unsatisfied);
  return scorer.select(state.unsatisfied);
}

double branch_score(const Graph& g, const SearchState& state, const BranchSelector& sel, int clause, VarOrder order) {
  validate_selector(g, sel);
  NodeScorer scorer(g, sel, order);
  scorer.prepare(state.candidates, state.unsatisfied);
  return scorer.score(clause);
}

std::vector<Vertex> branch_variables(const Graph& g, const SearchState& state, int clause, VarOrder order) {
  const BranchSelector mrv;
  NodeScorer scorer(g, mrv, order);
  scorer.prepare(state.candidates, state.unsatisfied);
  return scorer.variables(clause);
}

SolveReport solve_dc(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel, const SolveOptions& options) {
  validate_instance(cnf, g, sel);
  return Search(cnf, g, sel, VarOrder::ascending_index, options).run_existence();
}

SolveReport solve_min_dc(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel, bool backjumping,
                         const SolveOptions& options) {
  validate_instance(cnf, g, sel);
  return Search(cnf, g, sel, VarOrder::most_unsatisfied, options).run_minimum(backjumping);
}

}  // namespace domclq
