#include "procgame/generator.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "procgame/errors.hpp"

namespace procgame {
namespace {

std::string padded(int value, int width) {
  std::string digits = std::to_string(value);
  while (static_cast<int>(digits.size()) < width) digits.insert(0, 1, '0');
  return digits;
}

}  // namespace

std::string generate_game_text(const GeneratorOptions& options) {
  if (options.players < 1) throw Error("generator needs at least one player");
  if (options.actions < 1) throw Error("generator needs at least one action");
  if (options.degree < 1) throw Error("generator needs degree at least one");

  const int n = options.players;
  const int d = options.actions;
  int width = 2;
  for (int rest = n; rest >= 100; rest /= 10) ++width;

  auto player_name = [&](int i) { return "p" + padded(i, width); };
  auto action_name = [&](int i, int k) {
    return "a" + padded(i, width) + "x" + std::to_string(k);
  };

  std::mt19937_64 rng(options.seed);
  auto value = [&rng] { return static_cast<int>(rng() % 5); };

  std::ostringstream out;
  out << "# generated game: players=" << n << " actions=" << d
      << " degree=" << options.degree << " seed=" << options.seed << "\n";
  out << "mode perfect\n";
  out << "players: ";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out << ", ";
    out << player_name(i);
  }
  out << "\n";

  for (int i = 1; i <= n; ++i) {
    out << "process " << player_name(i) << " := ";

    std::vector<int> neighbours;
    if (i > 1) {
      neighbours.push_back(i - 1);
      std::vector<int> candidates;
      for (int u = 1; u <= i - 2; ++u) candidates.push_back(u);
      int extra = options.degree - 1;
      while (extra-- > 0 && !candidates.empty()) {
        std::size_t at = rng() % candidates.size();
        neighbours.push_back(candidates[at]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(at));
      }
    }

    if (!neighbours.empty()) {
      out << "[";
      for (std::size_t j = 0; j < neighbours.size(); ++j) {
        if (j > 0) out << "&";
        out << "(";
        for (int k = 1; k <= d; ++k) {
          if (k > 1) out << "|";
          out << "mid(" << action_name(neighbours[j], k) << ")";
        }
        out << ")";
      }
      out << "]";
    }
    out << "(";
    for (int k = 1; k <= d; ++k) {
      if (k > 1) out << "+";
      out << action_name(i, k);
    }
    out << ")\n";

    out << "payoff " << player_name(i) << ":\n";
    int partner = i > 1 ? i - 1 : (n > 1 ? 2 : 0);
    if (partner > 0) {
      for (int k = 1; k <= d; ++k) {
        int pick = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        out << "  mid(" << action_name(i, k) << ")&mid("
            << action_name(partner, pick) << ")->" << value() << "\n";
      }
    }
    for (int k = 1; k <= d; ++k)
      out << "  mid(" << action_name(i, k) << ")->" << value() << "\n";
    out << "  true->" << value() << "\n";
  }
  return out.str();
}

}  // namespace procgame
