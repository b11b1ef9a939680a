#pragma once

#include <cstddef>
#include <string>

#include "procgame/process_game.hpp"

namespace procgame {

// The game tree written as a term: children joined by "+", a move prefixing
// its subtree with ".", parentheses only around subtrees that branch. Moves
// appear in tree order. Throws BudgetExceededError past `max_nodes` nodes.
std::string canonical_term(const ProcessGame& game,
                           std::size_t max_nodes = 1'000'000);

// The game tree in Graphviz DOT form: circles for inner nodes labelled with
// the movers' names, boxes for leaves labelled with the payoff vector, edges
// labelled with the move. Node ids follow a depth-first preorder, so output
// is deterministic. Throws BudgetExceededError past `max_nodes` nodes.
std::string to_dot(const ProcessGame& game, std::size_t max_nodes = 1'000'000);

}  // namespace procgame
