#pragma once

#include <cstdint>
#include <string>

namespace procgame {

struct GeneratorOptions {
  int players = 2;
  int actions = 2;   // moves per player
  int degree = 1;    // neighbours each player's enabling condition mentions
  std::uint64_t seed = 0;
};

// Emits the text of a random turn-ordered game. Player 1 starts with a free
// choice among its actions; every later player is enabled once all its
// neighbours have moved, the previous player always among them, so play
// proceeds player by player and the tree branches `actions` ways at each of
// `players` levels. Payoff rules pair each own action with a neighbour's
// and end in a catch-all, so every path is covered. Output is a function of
// the options alone: the same options give identical bytes.
std::string generate_game_text(const GeneratorOptions& options = {});

}  // namespace procgame
