#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "procgame/action.hpp"
#include "procgame/formula.hpp"

namespace procgame {

// States are opaque identities; the note attached to each is debug text and
// never takes part in equality.
using StateId = std::uint32_t;

// A guarded action. The plain action a is represented as [true]a.
struct ConditionalAction {
  Formula condition;
  ActionLabel label;
};

// A finite transition system over conditional actions: a state set with a
// designated initial state, a terminating subset, and labelled transitions
// stored per source state in insertion order.
//
// Instances are immutable once built (see TransitionSystemBuilder) and safe
// to share across threads. Every state is reachable from the initial state;
// the builder drops unreachable states and renumbers the rest in first-visit
// order, so state 0 is always the initial state.
class TransitionSystem {
 public:
  struct Transition {
    ConditionalAction action;
    StateId target;
  };

  StateId initial() const noexcept { return 0; }
  std::size_t state_count() const noexcept { return outgoing_.size(); }
  bool terminating(StateId s) const { return terminating_.at(s); }
  std::span<const Transition> outgoing(StateId s) const {
    return outgoing_.at(s);
  }
  const std::string& note(StateId s) const { return notes_.at(s); }

  // Number of conditional-action occurrences.
  std::size_t transition_count() const noexcept;

  // Distinct labels in first-occurrence order.
  std::vector<ActionLabel> action_labels() const;

 private:
  friend class TransitionSystemBuilder;

  std::vector<std::vector<Transition>> outgoing_;
  std::vector<char> terminating_;
  std::vector<std::string> notes_;
};

// Mutable staging area for a TransitionSystem. All mutation happens here,
// before publication; build() finalises and returns the immutable system.
class TransitionSystemBuilder {
 public:
  StateId add_state(std::string note = "");
  void add_transition(StateId from, Formula condition, ActionLabel label, StateId to);
  void set_initial(StateId s);
  void set_terminating(StateId s, bool value = true);
  bool is_terminating(StateId s) const { return terminating_.at(s) != 0; }

  // Conjoins `guard` onto every transition out of `s`.
  void guard_outgoing(StateId s, const Formula& guard);
  // Moves all transitions out of `from` onto `to`, leaving `from` bare.
  void merge_outgoing_into(StateId from, StateId to);
  // Rewrites every transition targeting `from` to target `to`.
  void redirect_into(StateId from, StateId to);

  std::size_t state_count() const noexcept { return outgoing_.size(); }

  // Publishes the system: keeps exactly the states reachable from the
  // initial state, renumbered in first-visit order.
  TransitionSystem build() const;

 private:
  struct StagedTransition {
    Formula condition;
    ActionLabel label;
    StateId target;
  };

  StateId initial_ = 0;
  std::vector<std::vector<StagedTransition>> outgoing_;
  std::vector<char> terminating_;
  std::vector<std::string> notes_;
};

// The unique trace from the initial state to `s`. Throws AmbiguousHistoryError
// when distinct traces reach `s` (possible in hand-built systems and at the
// join states sequential composition introduces), and Error when `s` is
// unreachable or a cycle is found.
Trace history_of(const TransitionSystem& ts, StateId s);

// All states reachable from the initial state, ascending. On systems produced
// by TransitionSystemBuilder this is every state.
std::vector<StateId> reachable_states(const TransitionSystem& ts);

}  // namespace procgame
