#include "procgame/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "procgame/errors.hpp"
#include "procgame/formula.hpp"

namespace procgame {
namespace {

std::string node_phrase(const Trace& history) {
  if (history.empty()) return "at the initial node";
  return "after \"" + trace_str(history) + "\"";
}

struct SolveAbort {
  Verdict verdict;
};

class DfsSolver {
 public:
  DfsSolver(const ProcessGame& game, TieBreak tie_break)
      : game_(game), tree_(build_game_tree(game)), tie_break_(tie_break) {}

  EquilibriumResult run() {
    EquilibriumResult out;
    try {
      RatEntry root = visit(tree_.root());
      out.verdict = Verdict::Path;
      out.path = std::move(root.suffix);
      out.payoffs = std::move(root.values);
    } catch (const SolveAbort& abort) {
      out.verdict = abort.verdict;
    }
    out.stats = stats_;
    return out;
  }

 private:
  RatEntry visit(const ProductNode& node) {
    ++stats_.nodes_expanded;
    std::vector<GameMove> moves = tree_.moves(node);
    if (moves.empty()) {
      RatEntry leaf{{}, game_.payoffs_of(node.history)};
      note_entry();
      return leaf;
    }

    std::vector<std::pair<ActionLabel, RatEntry>> children;
    children.reserve(moves.size());
    for (const GameMove& m : moves)
      children.emplace_back(m.label, visit(tree_.child(node, m)));

    std::size_t chosen = select(node, children);

    RatEntry out;
    out.suffix.reserve(children[chosen].second.suffix.size() + 1);
    out.suffix.push_back(children[chosen].first);
    const Trace& rest = children[chosen].second.suffix;
    out.suffix.insert(out.suffix.end(), rest.begin(), rest.end());
    out.values = std::move(children[chosen].second.values);
    note_entry();
    release(children.size());
    return out;
  }

  std::size_t select(
      const ProductNode& node,
      const std::vector<std::pair<ActionLabel, RatEntry>>& children) {
    bool all_atomic = true;
    bool all_joint = true;
    for (const auto& [label, entry] : children) {
      all_atomic = all_atomic && label.is_atomic();
      all_joint = all_joint && label.is_joint();
    }

    if (all_joint) {
      SimultaneousSelection pick = handle_simultaneous(children, tie_break_);
      stats_.tie_breaks += pick.ties_broken;
      if (pick.verdict != Verdict::Path) throw SolveAbort{pick.verdict};
      return pick.index;
    }

    if (!all_atomic)
      throw Error("unresolved mix of joint and single moves " +
                  node_phrase(node.history));

    PlayerId owner = children[0].first.owner();
    for (const auto& [label, entry] : children) {
      if (label.owner() != owner)
        throw Error("several players can move independently " +
                    node_phrase(node.history) +
                    "; the game does not validate");
    }

    std::size_t who = static_cast<std::size_t>(owner);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [label, entry] : children)
      best = std::max(best, entry.values.at(who));
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < children.size(); ++i)
      if (children[i].second.values.at(who) == best) candidates.push_back(i);

    if (candidates.size() == 1) return candidates.front();
    if (tie_break_ == TieBreak::Error) throw SolveAbort{Verdict::Ambiguous};
    ++stats_.tie_breaks;
    std::size_t chosen = candidates.front();
    for (std::size_t i : candidates)
      if (children[i].first.str() < children[chosen].first.str()) chosen = i;
    return chosen;
  }

  void note_entry() {
    ++live_;
    stats_.peak_entries = std::max(stats_.peak_entries, live_);
  }

  void release(std::size_t count) { live_ -= count; }

  const ProcessGame& game_;
  ComposedGame tree_;
  TieBreak tie_break_;
  SolveStats stats_;
  std::size_t live_ = 0;
};

}  // namespace

EquilibriumResult solve(const ProcessGame& game, TieBreak tie_break) {
  return DfsSolver(game, tie_break).run();
}

SimultaneousSelection handle_simultaneous(
    std::span<const std::pair<ActionLabel, RatEntry>> children,
    TieBreak tie_break) {
  if (children.empty()) throw Error("simultaneous node with no moves");

  std::vector<PlayerId> participants;
  for (const Atom& a : children[0].first.atoms()) participants.push_back(a.owner);
  std::sort(participants.begin(), participants.end());

  std::map<ActionLabel, std::size_t> index_of;
  std::map<PlayerId, std::vector<Atom>> strategies;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const ActionLabel& label = children[i].first;
    if (!label.is_joint())
      throw Error("simultaneous selection got single move '" + label.str() +
                  "'");
    std::vector<PlayerId> owners;
    for (const Atom& a : label.atoms()) owners.push_back(a.owner);
    std::sort(owners.begin(), owners.end());
    if (owners != participants)
      throw Error("joint move " + label.str() +
                  " has a different participant set than its siblings");
    if (!index_of.emplace(label, i).second)
      throw Error("duplicate joint move " + label.str());
    for (const Atom& a : label.atoms()) {
      std::vector<Atom>& options = strategies[a.owner];
      if (std::find(options.begin(), options.end(), a) == options.end())
        options.push_back(a);
    }
  }

  std::size_t product = 1;
  for (const auto& [player, options] : strategies) product *= options.size();
  if (product != children.size())
    throw Error("simultaneous node misses part of the product of choices");

  std::vector<std::size_t> equilibria;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const ActionLabel& label = children[i].first;
    const RatEntry& entry = children[i].second;
    bool stable = true;
    for (const Atom& own : label.atoms()) {
      std::size_t who = static_cast<std::size_t>(own.owner);
      for (const Atom& alt : strategies[own.owner]) {
        if (alt == own) continue;
        std::vector<ActionLabel> parts;
        for (const Atom& a : label.atoms()) {
          const Atom& use = a.owner == own.owner ? alt : a;
          parts.push_back(ActionLabel::atomic(use.name, use.owner));
        }
        std::size_t target = index_of.at(ActionLabel::joint(parts));
        if (children[target].second.values.at(who) > entry.values.at(who)) {
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
    if (stable) equilibria.push_back(i);
  }

  SimultaneousSelection out;
  if (equilibria.empty()) {
    out.verdict = Verdict::NoPureEquilibrium;
    return out;
  }
  if (equilibria.size() == 1) {
    out.verdict = Verdict::Path;
    out.index = equilibria.front();
    return out;
  }
  if (tie_break == TieBreak::Error) {
    out.verdict = Verdict::Ambiguous;
    return out;
  }
  out.verdict = Verdict::Path;
  out.index = equilibria.front();
  for (std::size_t i : equilibria)
    if (children[i].first.str() < children[out.index].first.str())
      out.index = i;
  out.ties_broken = 1;
  return out;
}

namespace {

// One equilibrium outcome a subtree supports: the payoffs, the path from the
// subtree's root, and where it came from (child index and the index of the
// continuation inside that child's own support set).
struct SupEntry {
  std::vector<double> vals;
  Trace path;
  std::size_t child = 0;
  std::size_t entry = 0;
};

struct ONode {
  Trace history;
  bool simultaneous = false;
  PlayerId owner = kNoOwner;
  std::vector<PlayerId> participants;
  std::vector<std::size_t> radix;  // options per participant
  std::vector<ActionLabel> labels;
  std::vector<std::unique_ptr<ONode>> children;
  std::vector<SupEntry> support;
};

std::vector<std::size_t> decode_picks(const std::vector<std::size_t>& radix,
                                      std::size_t index) {
  std::vector<std::size_t> picks(radix.size());
  for (std::size_t j = radix.size(); j-- > 0;) {
    picks[j] = index % radix[j];
    index /= radix[j];
  }
  return picks;
}

std::size_t encode_picks(const std::vector<std::size_t>& radix,
                         const std::vector<std::size_t>& picks) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < radix.size(); ++j)
    index = index * radix[j] + picks[j];
  return index;
}

std::unique_ptr<ONode> build_oracle_tree(const ProcessGame& game,
                                         const std::vector<StateId>& states,
                                         Trace history,
                                         std::size_t& budget) {
  if (budget == 0)
    throw BudgetExceededError("reference solver exceeded its node budget");
  --budget;

  auto node = std::make_unique<ONode>();
  node->history = std::move(history);

  std::size_t n = game.player_count();
  std::vector<std::vector<std::pair<ActionLabel, StateId>>> options(n);
  std::vector<PlayerId> enabled;
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& t : game.player(static_cast<PlayerId>(p))
                             .process.outgoing(states[p])) {
      if (satisfies(node->history, t.action.condition))
        options[p].push_back({t.action.label, t.target});
    }
    if (!options[p].empty()) enabled.push_back(static_cast<PlayerId>(p));
  }

  if (enabled.empty()) return node;

  if (enabled.size() == 1 || game.mode() == CommMode::None) {
    if (enabled.size() > 1)
      throw Error("several players can move independently " +
                  node_phrase(node->history) + "; the game does not validate");
    PlayerId p = enabled.front();
    node->owner = p;
    for (const auto& [label, target] : options[static_cast<std::size_t>(p)]) {
      std::vector<StateId> next = states;
      next[static_cast<std::size_t>(p)] = target;
      Trace h = node->history;
      h.push_back(label);
      node->labels.push_back(label);
      node->children.push_back(
          build_oracle_tree(game, next, std::move(h), budget));
    }
    return node;
  }

  node->simultaneous = true;
  node->participants = enabled;
  for (PlayerId p : enabled)
    node->radix.push_back(options[static_cast<std::size_t>(p)].size());
  std::size_t total = 1;
  for (std::size_t r : node->radix) total *= r;
  for (std::size_t index = 0; index < total; ++index) {
    std::vector<std::size_t> picks = decode_picks(node->radix, index);
    std::vector<ActionLabel> parts;
    std::vector<StateId> next = states;
    for (std::size_t j = 0; j < enabled.size(); ++j) {
      std::size_t p = static_cast<std::size_t>(enabled[j]);
      const auto& [label, target] = options[p][picks[j]];
      parts.push_back(label);
      next[p] = target;
    }
    ActionLabel label = ActionLabel::joint(parts);
    Trace h = node->history;
    h.push_back(label);
    node->labels.push_back(label);
    node->children.push_back(
        build_oracle_tree(game, next, std::move(h), budget));
  }
  return node;
}

void compute_support(ONode& v, const ProcessGame& game) {
  if (v.children.empty()) {
    v.support.push_back({game.payoffs_of(v.history), {}, 0, 0});
    return;
  }
  for (auto& child : v.children) compute_support(*child, game);
  for (const auto& child : v.children)
    if (child->support.empty()) return;  // some subtree has no equilibrium

  auto emit = [&v](std::size_t c, std::size_t idx) {
    const SupEntry& e = v.children[c]->support[idx];
    SupEntry out;
    out.vals = e.vals;
    out.path.reserve(e.path.size() + 1);
    out.path.push_back(v.labels[c]);
    out.path.insert(out.path.end(), e.path.begin(), e.path.end());
    out.child = c;
    out.entry = idx;
    v.support.push_back(std::move(out));
  };

  if (!v.simultaneous) {
    std::size_t who = static_cast<std::size_t>(v.owner);
    double threshold = -std::numeric_limits<double>::infinity();
    for (const auto& child : v.children) {
      double low = std::numeric_limits<double>::infinity();
      for (const SupEntry& e : child->support)
        low = std::min(low, e.vals.at(who));
      threshold = std::max(threshold, low);
    }
    for (std::size_t c = 0; c < v.children.size(); ++c)
      for (std::size_t idx = 0; idx < v.children[c]->support.size(); ++idx)
        if (v.children[c]->support[idx].vals.at(who) >= threshold)
          emit(c, idx);
    return;
  }

  std::size_t k = v.participants.size();
  std::vector<std::vector<double>> low(v.children.size(),
                                       std::vector<double>(k));
  for (std::size_t c = 0; c < v.children.size(); ++c) {
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t who = static_cast<std::size_t>(v.participants[j]);
      double m = std::numeric_limits<double>::infinity();
      for (const SupEntry& e : v.children[c]->support)
        m = std::min(m, e.vals.at(who));
      low[c][j] = m;
    }
  }
  for (std::size_t c = 0; c < v.children.size(); ++c) {
    std::vector<std::size_t> picks = decode_picks(v.radix, c);
    std::vector<double> thresholds(k,
                                   -std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t alt = 0; alt < v.radix[j]; ++alt) {
        if (alt == picks[j]) continue;
        std::vector<std::size_t> dev = picks;
        dev[j] = alt;
        thresholds[j] =
            std::max(thresholds[j], low[encode_picks(v.radix, dev)][j]);
      }
    }
    for (std::size_t idx = 0; idx < v.children[c]->support.size(); ++idx) {
      const SupEntry& e = v.children[c]->support[idx];
      bool stable = true;
      for (std::size_t j = 0; j < k && stable; ++j)
        stable = e.vals.at(static_cast<std::size_t>(v.participants[j])) >=
                 thresholds[j];
      if (stable) emit(c, idx);
    }
  }
}

void extract_strategy(const ONode& v, const SupEntry& e,
                      std::map<std::string, ActionLabel>& strategy) {
  if (v.children.empty()) return;
  strategy.emplace(trace_str(v.history), v.labels[e.child]);
  extract_strategy(*v.children[e.child], v.children[e.child]->support[e.entry],
                   strategy);

  std::vector<std::size_t> picks;
  if (v.simultaneous) picks = decode_picks(v.radix, e.child);
  for (std::size_t b = 0; b < v.children.size(); ++b) {
    if (b == e.child) continue;
    PlayerId deviator = kNoOwner;
    if (!v.simultaneous) {
      deviator = v.owner;
    } else {
      std::vector<std::size_t> other = decode_picks(v.radix, b);
      std::size_t differing = 0;
      std::size_t coord = 0;
      for (std::size_t j = 0; j < picks.size(); ++j) {
        if (other[j] != picks[j]) {
          ++differing;
          coord = j;
        }
      }
      if (differing == 1) deviator = v.participants[coord];
    }
    const std::vector<SupEntry>& pool = v.children[b]->support;
    std::size_t pick = 0;
    if (deviator != kNoOwner) {
      std::size_t who = static_cast<std::size_t>(deviator);
      for (std::size_t idx = 1; idx < pool.size(); ++idx)
        if (pool[idx].vals.at(who) < pool[pick].vals.at(who)) pick = idx;
    }
    extract_strategy(*v.children[b], pool[pick], strategy);
  }
}

}  // namespace

OracleResult oracle_backward_induction(const ProcessGame& game,
                                       OracleOptions options) {
  std::vector<StateId> states;
  for (const Player& p : game.players()) states.push_back(p.process.initial());
  std::size_t budget = options.max_nodes;
  std::unique_ptr<ONode> root =
      build_oracle_tree(game, states, {}, budget);
  compute_support(*root, game);

  OracleResult out;
  out.no_pure = root->support.empty();
  for (const SupEntry& e : root->support) {
    OracleEquilibrium eq;
    eq.path = e.path;
    eq.payoffs = e.vals;
    extract_strategy(*root, e, eq.strategy);
    out.equilibria.push_back(std::move(eq));
  }
  return out;
}

}  // namespace procgame
