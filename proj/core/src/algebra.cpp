#include "procgame/algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "procgame/errors.hpp"

namespace procgame {

ConditionalAction communicate(std::span<const ConditionalAction> parts) {
  if (parts.size() < 2) throw Error("a joint move needs at least two parts");
  std::vector<ActionLabel> labels;
  labels.reserve(parts.size());
  Formula condition = Formula::top();
  for (const ConditionalAction& part : parts) {
    labels.push_back(part.label);
    condition = Formula::conjunction(condition, part.condition);
  }
  return ConditionalAction{std::move(condition), ActionLabel::joint(labels)};
}

ComposedGame::ComposedGame(std::vector<const TransitionSystem*> components,
                           CommMode mode)
    : components_(std::move(components)), mode_(mode) {
  if (components_.empty()) throw Error("composition needs at least one component");
  for (const TransitionSystem* ts : components_) {
    if (ts == nullptr) throw Error("composition over a null component");
  }
  // Atomic labels must be pairwise distinct across components. Labels carry
  // their owning player, so this only fails when one player's actions appear
  // in two components.
  std::set<Atom> seen;
  for (const TransitionSystem* ts : components_) {
    for (const ActionLabel& label : ts->action_labels()) {
      for (const Atom& atom : label.atoms()) {
        if (!seen.insert(atom).second) {
          throw AlphabetOverlapError("action '" + atom.name +
                                     "' appears in two components");
        }
      }
    }
  }
}

ProductNode ComposedGame::root() const {
  ProductNode node;
  node.states.reserve(components_.size());
  for (const TransitionSystem* ts : components_) node.states.push_back(ts->initial());
  return node;
}

bool ComposedGame::terminating(const ProductNode& node) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->terminating(node.states[i])) return false;
  }
  return true;
}

std::vector<RawMove> ComposedGame::raw_moves(const ProductNode& node) const {
  const std::size_t n = components_.size();

  std::vector<RawMove> out;
  std::vector<std::span<const TransitionSystem::Transition>> enabled(n);
  for (std::size_t i = 0; i < n; ++i) {
    enabled[i] = components_[i]->outgoing(node.states[i]);
    for (const auto& t : enabled[i]) {
      RawMove move{t.action, node.states};
      move.next[i] = t.target;
      out.push_back(std::move(move));
    }
  }

  if (mode_ != CommMode::Join) return out;

  // Joint moves: one transition from each member of every set of two or more
  // players that can move. Masks ascend, so the enumeration is deterministic.
  std::vector<std::size_t> members;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    members.clear();
    bool viable = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        if (enabled[i].empty()) {
          viable = false;
          break;
        }
        members.push_back(i);
      }
    }
    if (!viable) continue;

    // Odometer over the members' enabled transitions, last member fastest.
    std::vector<std::size_t> pick(members.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<ConditionalAction> parts;
      parts.reserve(members.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        parts.push_back(enabled[members[k]][pick[k]].action);
      }
      RawMove move{communicate(parts), node.states};
      for (std::size_t k = 0; k < members.size(); ++k) {
        move.next[members[k]] = enabled[members[k]][pick[k]].target;
      }
      out.push_back(std::move(move));

      std::size_t k = members.size();
      while (true) {
        if (k == 0) {
          done = true;
          break;
        }
        --k;
        if (++pick[k] < enabled[members[k]].size()) break;
        pick[k] = 0;
      }
    }
  }
  return out;
}

std::vector<GameMove> ComposedGame::conditional_moves(const ProductNode& node) const {
  std::vector<RawMove> raw = raw_moves(node);
  std::vector<GameMove> out;
  out.reserve(raw.size());
  for (RawMove& move : raw) {
    if (satisfies(node.history, move.action.condition)) {
      out.push_back(GameMove{std::move(move.action.label), std::move(move.next)});
    }
  }
  return out;
}

std::vector<GameMove> ComposedGame::moves(const ProductNode& node) const {
  std::vector<GameMove> kept = conditional_moves(node);
  std::vector<GameMove> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (i != j && kept[i].label.proper_subset_of(kept[j].label)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) out.push_back(std::move(kept[i]));
  }
  return out;
}

ProductNode ComposedGame::child(const ProductNode& node, const GameMove& move) const {
  ProductNode next;
  next.states = move.next;
  next.history = node.history;
  next.history.push_back(move.label);
  return next;
}

TransitionSystem encapsulate(const TransitionSystem& ts,
                             const std::vector<ActionLabel>& cut) {
  TransitionSystemBuilder b;
  for (StateId s = 0; s < ts.state_count(); ++s) {
    b.add_state(ts.note(s));
    b.set_terminating(s, ts.terminating(s));
  }
  b.set_initial(ts.initial());
  for (StateId s = 0; s < ts.state_count(); ++s) {
    for (const auto& t : ts.outgoing(s)) {
      if (std::find(cut.begin(), cut.end(), t.action.label) == cut.end()) {
        b.add_transition(s, t.action.condition, t.action.label, t.target);
      }
    }
  }
  return b.build();
}

TransitionSystem cut_subsumed(const TransitionSystem& ts) {
  TransitionSystemBuilder b;
  for (StateId s = 0; s < ts.state_count(); ++s) {
    b.add_state(ts.note(s));
    b.set_terminating(s, ts.terminating(s));
  }
  b.set_initial(ts.initial());
  for (StateId s = 0; s < ts.state_count(); ++s) {
    const auto row = ts.outgoing(s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      bool subsumed = false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (i != j && row[i].action.label.proper_subset_of(row[j].action.label)) {
          subsumed = true;
          break;
        }
      }
      if (!subsumed) {
        b.add_transition(s, row[i].action.condition, row[i].action.label,
                         row[i].target);
      }
    }
  }
  return b.build();
}

namespace {

template <typename MovesOf>
TransitionSystem materialize(const ComposedGame& game, std::size_t max_nodes,
                             MovesOf&& moves_of, bool keep_conditions) {
  TransitionSystemBuilder b;
  struct Item {
    ProductNode node;
    StateId state;
  };
  std::vector<Item> stack;
  const ProductNode root = game.root();
  const StateId root_state = b.add_state("");
  b.set_terminating(root_state, game.terminating(root));
  stack.push_back(Item{root, root_state});
  std::size_t created = 1;
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    for (const RawMove& move : moves_of(item.node)) {
      if (++created > max_nodes) {
        throw BudgetExceededError("composition exceeds the node budget");
      }
      ProductNode next;
      next.states = move.next;
      next.history = item.node.history;
      next.history.push_back(move.action.label);
      const StateId s = b.add_state(trace_str(next.history));
      b.set_terminating(s, game.terminating(next));
      b.add_transition(item.state,
                       keep_conditions ? move.action.condition : Formula::top(),
                       move.action.label, s);
      stack.push_back(Item{std::move(next), s});
    }
  }
  return b.build();
}

}  // namespace

TransitionSystem materialize_raw(const ComposedGame& game, std::size_t max_nodes) {
  return materialize(
      game, max_nodes,
      [&](const ProductNode& node) { return game.raw_moves(node); }, true);
}

TransitionSystem materialize_tree(const ComposedGame& game, std::size_t max_nodes) {
  return materialize(
      game, max_nodes,
      [&](const ProductNode& node) {
        std::vector<RawMove> out;
        for (const GameMove& move : game.moves(node)) {
          out.push_back(RawMove{ConditionalAction{Formula::top(), move.label}, move.next});
        }
        return out;
      },
      false);
}

}  // namespace procgame
