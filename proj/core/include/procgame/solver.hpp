#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "procgame/action.hpp"
#include "procgame/process_game.hpp"

namespace procgame {

enum class TieBreak {
  Lexicographic,  // break ties on the label text, smallest first
  Error,          // refuse to choose; the result verdict becomes Ambiguous
};

enum class Verdict {
  Path,                // an equilibrium path was found
  NoPureEquilibrium,   // some simultaneous node has no pure equilibrium
  Ambiguous,           // a tie was hit under TieBreak::Error
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::size_t peak_entries = 0;  // most rational entries alive at once
  std::uint64_t tie_breaks = 0;  // nodes where several choices were optimal
};

struct EquilibriumResult {
  Verdict verdict = Verdict::Path;
  Trace path;                   // empty unless verdict == Path
  std::vector<double> payoffs;  // per player, along `path`
  SolveStats stats;
};

// A solved subtree: the path from the current node down to the selected leaf
// and every player's payoff along the full root-to-leaf path. Entries are
// what the solver keeps alive; their peak count is linear in the tree depth
// times the branching factor, never in the tree size.
struct RatEntry {
  Trace suffix;
  std::vector<double> values;
};

// Depth-first backward induction over the game tree. At a node owned by one
// player the move maximising that player's full-path payoff is kept; at a
// simultaneous node a pure-equilibrium move profile is kept. Children of a
// node are solved one by one and released as soon as the node's own entry
// exists.
EquilibriumResult solve(const ProcessGame& game,
                        TieBreak tie_break = TieBreak::Lexicographic);

struct SimultaneousSelection {
  Verdict verdict = Verdict::Path;
  std::size_t index = 0;  // chosen child when verdict == Path
  std::uint64_t ties_broken = 0;
};

// Equilibrium selection at one simultaneous node. `children` pairs each
// joint move with the solved value of its subtree, and must cover the full
// product of the participants' choices. A profile is kept when no single
// participant can raise their own value by swapping only their component.
SimultaneousSelection handle_simultaneous(
    std::span<const std::pair<ActionLabel, RatEntry>> children,
    TieBreak tie_break);

// Reference solver used to cross-check `solve`. It expands the whole tree
// eagerly and computes, bottom up, the set of every equilibrium outcome a
// subtree supports, so ties yield all alternatives instead of one.
struct OracleEquilibrium {
  Trace path;
  std::vector<double> payoffs;
  // Move chosen at each internal node, keyed by the node's history text.
  std::map<std::string, ActionLabel> strategy;
};

struct OracleResult {
  bool no_pure = false;  // true when no pure equilibrium exists
  std::vector<OracleEquilibrium> equilibria;
};

struct OracleOptions {
  std::size_t max_nodes = 1'000'000;
};

OracleResult oracle_backward_induction(const ProcessGame& game,
                                       OracleOptions options = {});

}  // namespace procgame
