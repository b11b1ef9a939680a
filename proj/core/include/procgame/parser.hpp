#pragma once

#include <string_view>

#include "procgame/formula.hpp"
#include "procgame/process_expr.hpp"
#include "procgame/process_game.hpp"

namespace procgame {

// Parses the textual game format: a mode line, a players line, then one
// process and one payoff block per declared player, in any statement order.
//
//   mode     := "mode" ("perfect" | "imperfect")
//   players  := "players" ":" name ("," name)*
//   stmt     := "process" name ":=" expr
//             | "payoff" name ":" (formula "->" number)+
//   expr     := term ("+" term)*
//   term     := factor ("." factor)*
//   factor   := name | "[" formula "]" factor | "(" expr ")"
//   formula  := "true" | pattern | ("pre"|"mid"|"pos") "(" pattern ")"
//             | "!" formula | formula "&" formula | formula "|" formula
//             | "(" formula ")"
//   pattern  := name ("." name)*
//
// "#" starts a comment running to the end of the line. "!" binds tighter
// than "&", which binds tighter than "|". Keywords cannot be used as names
// and "tau" is reserved. Throws ParseError for syntax errors and
// SemanticError listing every resolution problem at once.
ProcessGame parse_game(std::string_view text);

// Fragment parsers used on their own; the whole input must be consumed.
ProcessExpr parse_process_expr(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace procgame
