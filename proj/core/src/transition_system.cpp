#include "procgame/transition_system.hpp"

#include <algorithm>
#include <deque>

#include "procgame/errors.hpp"

namespace procgame {

std::size_t TransitionSystem::transition_count() const noexcept {
  std::size_t count = 0;
  for (const auto& row : outgoing_) count += row.size();
  return count;
}

std::vector<ActionLabel> TransitionSystem::action_labels() const {
  std::vector<ActionLabel> labels;
  for (const auto& row : outgoing_) {
    for (const Transition& t : row) {
      if (std::find(labels.begin(), labels.end(), t.action.label) == labels.end()) {
        labels.push_back(t.action.label);
      }
    }
  }
  return labels;
}

StateId TransitionSystemBuilder::add_state(std::string note) {
  outgoing_.emplace_back();
  terminating_.push_back(0);
  notes_.push_back(std::move(note));
  return static_cast<StateId>(outgoing_.size() - 1);
}

void TransitionSystemBuilder::add_transition(StateId from, Formula condition,
                                             ActionLabel label, StateId to) {
  outgoing_.at(from).push_back(
      StagedTransition{std::move(condition), std::move(label), to});
  (void)outgoing_.at(to);
}

void TransitionSystemBuilder::set_initial(StateId s) {
  (void)outgoing_.at(s);
  initial_ = s;
}

void TransitionSystemBuilder::set_terminating(StateId s, bool value) {
  terminating_.at(s) = value ? 1 : 0;
}

void TransitionSystemBuilder::guard_outgoing(StateId s, const Formula& guard) {
  for (StagedTransition& t : outgoing_.at(s)) {
    t.condition = Formula::conjunction(guard, t.condition);
  }
}

void TransitionSystemBuilder::merge_outgoing_into(StateId from, StateId to) {
  if (from == to) return;
  auto& source = outgoing_.at(from);
  auto& sink = outgoing_.at(to);
  sink.insert(sink.end(), std::make_move_iterator(source.begin()),
              std::make_move_iterator(source.end()));
  source.clear();
}

void TransitionSystemBuilder::redirect_into(StateId from, StateId to) {
  (void)outgoing_.at(from);
  (void)outgoing_.at(to);
  for (auto& row : outgoing_) {
    for (StagedTransition& t : row) {
      if (t.target == from) t.target = to;
    }
  }
}

TransitionSystem TransitionSystemBuilder::build() const {
  if (outgoing_.empty()) throw Error("cannot build an empty transition system");

  constexpr StateId kUnmapped = static_cast<StateId>(-1);
  std::vector<StateId> remap(outgoing_.size(), kUnmapped);
  std::vector<StateId> order;
  order.reserve(outgoing_.size());

  std::deque<StateId> frontier{initial_};
  remap[initial_] = 0;
  order.push_back(initial_);
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop_front();
    for (const StagedTransition& t : outgoing_[s]) {
      if (remap[t.target] == kUnmapped) {
        remap[t.target] = static_cast<StateId>(order.size());
        order.push_back(t.target);
        frontier.push_back(t.target);
      }
    }
  }

  TransitionSystem ts;
  ts.outgoing_.resize(order.size());
  ts.terminating_.resize(order.size());
  ts.notes_.resize(order.size());
  for (StateId fresh = 0; fresh < order.size(); ++fresh) {
    const StateId old = order[fresh];
    ts.terminating_[fresh] = terminating_[old];
    ts.notes_[fresh] = notes_[old];
    for (const StagedTransition& t : outgoing_[old]) {
      ts.outgoing_[fresh].push_back(TransitionSystem::Transition{
          ConditionalAction{t.condition, t.label}, remap[t.target]});
    }
  }
  return ts;
}

Trace history_of(const TransitionSystem& ts, StateId s) {
  if (s >= ts.state_count()) throw Error("state out of range");

  // Depth-first path enumeration; systems here are small and acyclic.
  std::vector<Trace> found;
  struct Frame {
    StateId state;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{Frame{ts.initial()}};
  Trace path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.state == s && top.next == 0) {
      if (std::find(found.begin(), found.end(), path) == found.end()) {
        found.push_back(path);
        if (found.size() > 1) {
          throw AmbiguousHistoryError("state reached by distinct traces: \"" +
                                      trace_str(found[0]) + "\" and \"" +
                                      trace_str(found[1]) + "\"");
        }
      }
    }
    const auto row = ts.outgoing(top.state);
    if (top.next < row.size()) {
      const auto& t = row[top.next++];
      if (stack.size() > ts.state_count()) {
        throw Error("cycle detected while computing a history");
      }
      path.push_back(t.action.label);
      stack.push_back(Frame{t.target});
    } else {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
    }
  }
  if (found.empty()) throw Error("state not reachable from the initial state");
  return found.front();
}

std::vector<StateId> reachable_states(const TransitionSystem& ts) {
  std::vector<char> seen(ts.state_count(), 0);
  std::deque<StateId> frontier{ts.initial()};
  seen[ts.initial()] = 1;
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop_front();
    for (const auto& t : ts.outgoing(s)) {
      if (!seen[t.target]) {
        seen[t.target] = 1;
        frontier.push_back(t.target);
      }
    }
  }
  std::vector<StateId> out;
  for (StateId s = 0; s < seen.size(); ++s) {
    if (seen[s]) out.push_back(s);
  }
  return out;
}

}  // namespace procgame
