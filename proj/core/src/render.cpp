#include "procgame/render.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "procgame/errors.hpp"

namespace procgame {
namespace {

struct Budget {
  std::size_t left;
  void spend() {
    if (left == 0)
      throw BudgetExceededError("game tree larger than the node budget");
    --left;
  }
};

struct TermPiece {
  std::string text;
  std::size_t branches;
};

TermPiece term_of(const ComposedGame& tree, const ProductNode& node,
                  Budget& budget) {
  budget.spend();
  std::vector<GameMove> moves = tree.moves(node);
  std::string out;
  for (const GameMove& m : moves) {
    if (!out.empty()) out += '+';
    out += m.label.str();
    TermPiece sub = term_of(tree, tree.child(node, m), budget);
    if (sub.branches == 1) {
      out += '.';
      out += sub.text;
    } else if (sub.branches > 1) {
      out += ".(";
      out += sub.text;
      out += ')';
    }
  }
  return {std::move(out), moves.size()};
}

std::string payoff_text(const std::vector<double>& payoffs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (i > 0) out << ", ";
    out << payoffs[i];
  }
  out << ')';
  return out.str();
}

std::string movers_text(const ProcessGame& game,
                        const std::vector<GameMove>& moves) {
  std::set<PlayerId> movers;
  for (const GameMove& m : moves)
    for (const Atom& a : m.label.atoms()) movers.insert(a.owner);
  std::string out;
  for (PlayerId p : movers) {
    if (!out.empty()) out += ',';
    out += game.player(p).name;
  }
  return out;
}

std::size_t dot_node(const ProcessGame& game, const ComposedGame& tree,
                     const ProductNode& node, Budget& budget,
                     std::size_t& next_id, std::ostringstream& out) {
  budget.spend();
  std::size_t id = next_id++;
  std::vector<GameMove> moves = tree.moves(node);
  if (moves.empty()) {
    out << "  n" << id << " [shape=box, label=\""
        << payoff_text(game.payoffs_of(node.history)) << "\"];\n";
    return id;
  }
  out << "  n" << id << " [shape=circle, label=\"" << movers_text(game, moves)
      << "\"];\n";
  for (const GameMove& m : moves) {
    std::size_t child = dot_node(game, tree, tree.child(node, m), budget,
                                 next_id, out);
    out << "  n" << id << " -> n" << child << " [label=\"" << m.label.str()
        << "\"];\n";
  }
  return id;
}

}  // namespace

std::string canonical_term(const ProcessGame& game, std::size_t max_nodes) {
  ComposedGame tree = build_game_tree(game);
  Budget budget{max_nodes};
  return term_of(tree, tree.root(), budget).text;
}

std::string to_dot(const ProcessGame& game, std::size_t max_nodes) {
  ComposedGame tree = build_game_tree(game);
  Budget budget{max_nodes};
  std::ostringstream out;
  out << "digraph game {\n";
  std::size_t next_id = 0;
  dot_node(game, tree, tree.root(), budget, next_id, out);
  out << "}\n";
  return out.str();
}

}  // namespace procgame
