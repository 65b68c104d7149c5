#pragma once

// Backtracking search for dominating cliques over the CNF encoding, with a
// pluggable clause-selection rule, plus a minimisation variant with
// backjumping.

#include "domclq/bitset.hpp"
#include "domclq/cnf.hpp"
#include "domclq/graph.hpp"
#include "domclq/probmap.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace domclq {

enum class Heuristic { mrv, entropy_fast, entropy_accurate };

// "mrv", "ent-fast", "ent-acc".
std::string_view heuristic_name(Heuristic h) noexcept;
std::optional<Heuristic> parse_heuristic(std::string_view name) noexcept;

struct BranchSelector {
  Heuristic policy = Heuristic::mrv;
  std::optional<ProbMap> probmap;  // required by the entropy policies
  double temperature = 1.0;
};

// Order in which the variables of the chosen clause are tried.
enum class VarOrder {
  ascending_index,
  most_unsatisfied,  // decreasing |U ∩ N[x]|, ties by index
};

// A node of the search: D is the partial clique, S the candidate variables
// (each adjacent to all of D), U the clauses C_i whose vertex v_i is not yet
// dominated by D. Bit i of `unsatisfied` stands for clause C_i.
struct SearchState {
  std::vector<Vertex> clique;
  Bitset candidates;
  Bitset unsatisfied;
  int depth = 0;
  std::uint64_t branches = 0;

  // D = {}, S = all variables, U = all clauses.
  static SearchState initial(const Graph& g);
};

// Chooses the clause of U to branch on. A clause with C ∩ S empty is returned
// at once (the node is dead). Otherwise the clause minimising the policy score
// wins, ties to the smallest index: mrv scores |C ∩ S|; the entropy policies
// score the joint entropy of C ∩ S under softmax-reweighed probabilities of
// the variables in S (all other vertices weigh 0). Requires U non-empty.
int select_branch_clause(const Graph& g, const SearchState& state, const BranchSelector& sel,
                         VarOrder order = VarOrder::ascending_index);

// The score select_branch_clause minimises, for one clause of U.
double branch_score(const Graph& g, const SearchState& state, const BranchSelector& sel, int clause,
                    VarOrder order = VarOrder::ascending_index);

// C ∩ S in the order the search tries them.
std::vector<Vertex> branch_variables(const Graph& g, const SearchState& state, int clause, VarOrder order);

enum class Outcome { found, not_found };

struct SolveReport {
  Outcome outcome = Outcome::not_found;
  std::vector<Vertex> solution;  // sorted; empty when not found
  std::optional<int> min_size;   // minimisation only
  std::uint64_t branches = 0;    // assignments X_i <- 1
  std::uint64_t nodes = 0;       // recursive calls, root included
  std::uint64_t backjumps = 0;   // unwinds triggered
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOptions {
  // Re-verify the SearchState invariants at every node; throws domclq::Error
  // on violation. Slow; meant for tests.
  bool check_invariants = false;
};

// Throws domclq::Error if cnf is not encode_cnf(g) or the selector's probmap
// is missing or sized wrongly.
SolveReport solve_dc(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel,
                     const SolveOptions& options = {});

// Exhaustive search for a minimum dominating clique. With backjumping on,
// finding a new incumbent unwinds three levels (the leaf, its parent and
// grandparent) and reaching depth |incumbent| unwinds two.
SolveReport solve_min_dc(const CnfInstance& cnf, const Graph& g, const BranchSelector& sel, bool backjumping,
                         const SolveOptions& options = {});

}  // namespace domclq
