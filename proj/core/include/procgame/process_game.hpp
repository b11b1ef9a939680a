#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "procgame/algebra.hpp"
#include "procgame/payoff.hpp"
#include "procgame/transition_system.hpp"

namespace procgame {

struct Player {
  std::string name;
  TransitionSystem process;
  PayoffRuleSet payoffs;
};

// A compact game: one process and one payoff rule set per player, plus the
// communication mode. The game tree it denotes is the composition of the
// processes with conditions resolved and subsumed moves cut.
class ProcessGame {
 public:
  ProcessGame(std::vector<Player> players, CommMode mode);

  std::span<const Player> players() const noexcept { return players_; }
  std::size_t player_count() const noexcept { return players_.size(); }
  const Player& player(PlayerId i) const { return players_.at(i); }
  CommMode mode() const noexcept { return mode_; }

  double payoff_of(PlayerId player, const Trace& path) const;
  std::vector<double> payoffs_of(const Trace& path) const;

 private:
  std::vector<Player> players_;
  CommMode mode_;
};

// The game tree, explored lazily. The result views the game's component
// systems; keep the game alive while using it.
ComposedGame build_game_tree(const ProcessGame& game);

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
};

// Checks that the game is well formed: labels in each player's process are
// owned by that player and atomic, no atomic action occurs in two processes,
// condition and payoff formulas mention declared action names only, payoff
// rules cover every complete path, and without communication no reachable
// node offers moves of two players. Tree-wide checks walk at most
// `max_nodes` nodes and degrade to a warning beyond that. Empty result means
// valid.
std::vector<Diagnostic> validate(const ProcessGame& game,
                                 std::size_t max_nodes = 1'000'000);

struct PlayerSizeReport {
  std::string name;
  std::size_t action_count = 0;   // distinct labels
  std::size_t process_size = 0;   // conditional-action occurrences
  std::size_t payoff_size = 0;    // rules plus condition sizes
};

// Size metrics and bounds. With n players whose largest action set has d
// elements, the game tree has at most d + d^2 + ... + d^n non-root nodes,
// while the compact description is measured by n*d*|B| plus the payoff
// sizes, where B counts all atomic actions and the full joint profiles.
struct SizeReport {
  std::size_t player_count = 0;                 // n
  std::size_t max_actions = 0;                  // d
  std::uint64_t action_base_size = 0;           // |B|
  std::vector<PlayerSizeReport> players;
  std::uint64_t description_bound = 0;          // n*d*|B| + sum of payoff sizes
  std::uint64_t tree_bound = 0;                 // sum of d^k, k = 1..n
  std::optional<std::uint64_t> exact_tree_size; // non-root nodes, when affordable
  std::optional<std::uint64_t> degree_bound;    // n*d^(degree+1) + payoff sizes
};

// `interaction_degree`, when given, is the neighbourhood size used for the
// local-interaction bound. `max_nodes` caps the exact tree count; past it,
// exact_tree_size is left empty.
SizeReport size_report(const ProcessGame& game,
                       std::optional<int> interaction_degree = std::nullopt,
                       std::size_t max_nodes = 1'000'000);

}  // namespace procgame
