#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "procgame/transition_system.hpp"

namespace procgame {

// How components may move together.
//
//   None  no communication: players only move one at a time
//   Join  any set of two or more players may move at once; the joint move is
//         labelled by the set of the atomic actions taken and guarded by the
//         conjunction of their conditions
enum class CommMode { None, Join };

// The joint conditional action of two or more unilateral ones: labels union
// into a set, conditions conjoin. Commutative up to label-set equality.
// Throws Error when given fewer than two parts or parts of one player.
ConditionalAction communicate(std::span<const ConditionalAction> parts);

// A state of the composed game: one component state per player plus the trace
// that led here. The trace is part of the node's identity; the composed game
// is explored as its unfolding, which is a tree, so the stored history always
// equals the history of the node in that tree.
struct ProductNode {
  std::vector<StateId> states;
  Trace history;
};

// A transition the raw parallel composition offers, before conditions are
// evaluated.
struct RawMove {
  ConditionalAction action;
  std::vector<StateId> next;  // full component-state tuple after the move
};

// A transition of the game tree, after conditions are resolved and stripped.
struct GameMove {
  ActionLabel label;
  std::vector<StateId> next;
};

// The parallel composition of the player processes, explored lazily. Children
// are recomputed on every call and never cached, so a depth-first traversal
// retains only its spine.
//
// Three views of the outgoing moves of a node are exposed:
//
//   raw_moves           the plain composition: every unilateral move and, in
//                       Join mode, every joint move of two or more players
//   conditional_moves   raw moves whose condition the node's history
//                       satisfies, with the condition stripped
//   moves               conditional_moves after the subsumption cut: a move
//                       is dropped when its label is a proper subset of a
//                       sibling's label
//
// Holds non-owning pointers to the component systems; keep those alive.
class ComposedGame {
 public:
  ComposedGame(std::vector<const TransitionSystem*> components, CommMode mode);

  std::size_t component_count() const noexcept { return components_.size(); }
  CommMode mode() const noexcept { return mode_; }

  ProductNode root() const;
  // All components terminating.
  bool terminating(const ProductNode& node) const;

  std::vector<RawMove> raw_moves(const ProductNode& node) const;
  std::vector<GameMove> conditional_moves(const ProductNode& node) const;
  std::vector<GameMove> moves(const ProductNode& node) const;

  ProductNode child(const ProductNode& node, const GameMove& move) const;

 private:
  std::vector<const TransitionSystem*> components_;
  CommMode mode_;
};

// Removes every transition whose label lies in `cut`. States and the
// terminating set are untouched; conditions are ignored when matching.
TransitionSystem encapsulate(const TransitionSystem& ts,
                             const std::vector<ActionLabel>& cut);

// Applies the subsumption cut statewise to an already built system: at each
// state, drops a transition whose label is a proper subset of the label of
// another transition from the same state.
TransitionSystem cut_subsumed(const TransitionSystem& ts);

// Forces the unfolding of the composed game into an explicit system, either
// of the raw composition (conditions kept) or of the game tree (conditions
// resolved, subsumption applied). State notes carry the history. Throws
// BudgetExceededError when more than `max_nodes` states would be created.
TransitionSystem materialize_raw(const ComposedGame& game, std::size_t max_nodes);
TransitionSystem materialize_tree(const ComposedGame& game, std::size_t max_nodes);

}  // namespace procgame
