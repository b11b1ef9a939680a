#include "procgame/process_game.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "procgame/errors.hpp"
#include "procgame/formula.hpp"

namespace procgame {

ProcessGame::ProcessGame(std::vector<Player> players, CommMode mode)
    : players_(std::move(players)), mode_(mode) {
  if (players_.empty()) throw Error("a game needs at least one player");
}

double ProcessGame::payoff_of(PlayerId player, const Trace& path) const {
  return players_.at(static_cast<std::size_t>(player)).payoffs.evaluate(path);
}

std::vector<double> ProcessGame::payoffs_of(const Trace& path) const {
  std::vector<double> out;
  out.reserve(players_.size());
  for (const Player& p : players_) out.push_back(p.payoffs.evaluate(path));
  return out;
}

ComposedGame build_game_tree(const ProcessGame& game) {
  std::vector<const TransitionSystem*> parts;
  parts.reserve(game.player_count());
  for (const Player& p : game.players()) parts.push_back(&p.process);
  return ComposedGame(std::move(parts), game.mode());
}

namespace {

std::string node_phrase(const Trace& history) {
  if (history.empty()) return "at the initial node";
  return "after \"" + trace_str(history) + "\"";
}

std::string path_phrase(const Trace& history) {
  if (history.empty()) return "the empty path";
  return "path \"" + trace_str(history) + "\"";
}

void add_error(std::vector<Diagnostic>& out, std::string message) {
  out.push_back({Diagnostic::Severity::Error, std::move(message)});
}

void add_warning(std::vector<Diagnostic>& out, std::string message) {
  out.push_back({Diagnostic::Severity::Warning, std::move(message)});
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  return a > kMax - b ? kMax : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp; ++k) out = sat_mul(out, base);
  return out;
}

constexpr std::size_t kExampleCap = 5;

}  // namespace

std::vector<Diagnostic> validate(const ProcessGame& game,
                                 std::size_t max_nodes) {
  std::vector<Diagnostic> out;

  std::set<std::string> names;
  for (const Player& p : game.players()) {
    if (!names.insert(p.name).second)
      add_error(out, "duplicate player name '" + p.name + "'");
  }

  std::set<std::string> declared;
  bool labels_ok = true;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const Player& p = game.player(static_cast<PlayerId>(i));
    for (const ActionLabel& label : p.process.action_labels()) {
      if (!label.is_atomic()) {
        add_error(out, "process of player '" + p.name +
                           "' contains non-atomic label " + label.str());
        labels_ok = false;
        continue;
      }
      declared.insert(label.name());
      if (label.owner() != static_cast<PlayerId>(i)) {
        add_error(out, "process of player '" + p.name + "' uses action '" +
                           label.name() + "' tagged for another player");
        labels_ok = false;
      }
    }
  }

  auto check_letters = [&](const Formula& f, const std::string& where) {
    std::set<std::string> letters;
    f.collect_letters(letters);
    for (const std::string& letter : letters) {
      if (!declared.contains(letter))
        add_error(out, where + " mentions '" + letter +
                           "', which names no action of any player");
    }
  };

  for (const Player& p : game.players()) {
    for (StateId s : reachable_states(p.process)) {
      for (const auto& t : p.process.outgoing(s)) {
        check_letters(t.action.condition,
                      "condition on action '" + t.action.label.str() +
                          "' of player '" + p.name + "'");
      }
    }
    std::set<std::string> letters;
    p.payoffs.collect_letters(letters);
    for (const std::string& letter : letters) {
      if (!declared.contains(letter))
        add_error(out, "payoff rule of player '" + p.name + "' mentions '" +
                           letter + "', which names no action of any player");
    }
  }

  if (!labels_ok) return out;

  ComposedGame tree = build_game_tree(game);

  std::size_t visited = 0;
  bool truncated = false;
  std::size_t turn_errors = 0;
  std::size_t payoff_errors = 0;
  std::vector<ProductNode> stack{tree.root()};
  while (!stack.empty()) {
    if (visited >= max_nodes) {
      truncated = true;
      break;
    }
    ++visited;
    ProductNode node = std::move(stack.back());
    stack.pop_back();
    std::vector<GameMove> moves = tree.moves(node);

    if (game.mode() == CommMode::None && moves.size() > 1) {
      std::set<PlayerId> movers;
      for (const GameMove& m : moves) movers.insert(m.label.owner());
      if (movers.size() > 1) {
        ++turn_errors;
        if (turn_errors <= kExampleCap) {
          std::ostringstream msg;
          msg << "players";
          for (PlayerId q : movers) msg << " '" << game.player(q).name << "'";
          msg << " all have moves " << node_phrase(node.history)
              << ", but the mode admits one mover per node";
          add_error(out, msg.str());
        }
      }
    }

    if (moves.empty()) {
      for (const Player& p : game.players()) {
        if (!p.payoffs.try_evaluate(node.history).has_value()) {
          ++payoff_errors;
          if (payoff_errors <= kExampleCap)
            add_error(out, "no payoff rule of player '" + p.name +
                               "' matches " + path_phrase(node.history));
        }
      }
    } else {
      for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        stack.push_back(tree.child(node, *it));
    }
  }

  if (turn_errors > kExampleCap)
    add_error(out, std::to_string(turn_errors - kExampleCap) +
                       " further nodes with several movers omitted");
  if (payoff_errors > kExampleCap)
    add_error(out, std::to_string(payoff_errors - kExampleCap) +
                       " further uncovered paths omitted");
  if (truncated)
    add_warning(out, "tree walk stopped after " + std::to_string(visited) +
                         " nodes; mover and payoff coverage checks are "
                         "incomplete");
  return out;
}

SizeReport size_report(const ProcessGame& game,
                       std::optional<int> interaction_degree,
                       std::size_t max_nodes) {
  SizeReport report;
  report.player_count = game.player_count();

  std::uint64_t action_sum = 0;
  std::uint64_t action_product = 1;
  std::uint64_t payoff_total = 0;
  for (const Player& p : game.players()) {
    PlayerSizeReport row;
    row.name = p.name;
    row.action_count = p.process.action_labels().size();
    row.process_size = p.process.transition_count();
    row.payoff_size = p.payoffs.size_metric();
    report.max_actions = std::max(report.max_actions, row.action_count);
    action_sum = sat_add(action_sum, row.action_count);
    action_product = sat_mul(action_product, row.action_count);
    payoff_total = sat_add(payoff_total, row.payoff_size);
    report.players.push_back(std::move(row));
  }
  report.action_base_size = sat_add(action_sum, action_product);
  report.description_bound =
      sat_add(sat_mul(sat_mul(report.player_count, report.max_actions),
                      report.action_base_size),
              payoff_total);

  std::uint64_t tree_bound = 0;
  for (std::size_t k = 1; k <= report.player_count; ++k)
    tree_bound = sat_add(tree_bound, sat_pow(report.max_actions, k));
  report.tree_bound = tree_bound;

  if (interaction_degree.has_value()) {
    std::uint64_t degree =
        *interaction_degree < 0 ? 0
                                : static_cast<std::uint64_t>(*interaction_degree);
    report.degree_bound =
        sat_add(sat_mul(report.player_count,
                        sat_pow(report.max_actions, degree + 1)),
                payoff_total);
  }

  ComposedGame tree = build_game_tree(game);
  std::uint64_t non_root = 0;
  bool exceeded = false;
  std::vector<ProductNode> stack{tree.root()};
  while (!stack.empty()) {
    ProductNode node = std::move(stack.back());
    stack.pop_back();
    for (const GameMove& m : tree.moves(node)) {
      if (++non_root > max_nodes) {
        exceeded = true;
        break;
      }
      stack.push_back(tree.child(node, m));
    }
    if (exceeded) break;
  }
  if (!exceeded) report.exact_tree_size = non_root;
  return report;
}

}  // namespace procgame
