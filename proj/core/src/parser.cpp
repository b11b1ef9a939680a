#include "procgame/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "procgame/errors.hpp"
#include "procgame/payoff.hpp"

namespace procgame {
namespace {

enum class Tok {
  Ident,
  Number,
  Assign,    // :=
  Arrow,     // ->
  Colon,
  Comma,
  Plus,
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Bang,
  Amp,
  Pipe,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int column = 1;
  double number = 0.0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Number:
      return "number '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

bool is_keyword(const std::string& word) {
  static const std::set<std::string> kKeywords = {
      "mode", "perfect", "imperfect", "players",
      "process", "payoff", "true", "pre", "mid", "pos"};
  return kKeywords.contains(word);
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blanks();
      Token t = next_token();
      bool done = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

 private:
  void skip_blanks() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        return;
      }
    }
  }

  Token next_token() {
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        bump();
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '>')) {
      return lex_number(t);
    }
    if (c == '-' ) {
      bump();
      if (pos_ < src_.size() && src_[pos_] == '>') {
        bump();
        t.kind = Tok::Arrow;
        t.text = "->";
        return t;
      }
      throw ParseError("stray '-'", t.line, t.column);
    }
    if (c == ':') {
      bump();
      if (pos_ < src_.size() && src_[pos_] == '=') {
        bump();
        t.kind = Tok::Assign;
        t.text = ":=";
      } else {
        t.kind = Tok::Colon;
        t.text = ":";
      }
      return t;
    }
    switch (c) {
      case ',': t.kind = Tok::Comma; break;
      case '+': t.kind = Tok::Plus; break;
      case '.': t.kind = Tok::Dot; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case '!': t.kind = Tok::Bang; break;
      case '&': t.kind = Tok::Amp; break;
      case '|': t.kind = Tok::Pipe; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         t.line, t.column);
    }
    t.text = std::string(1, c);
    bump();
    return t;
  }

  Token lex_number(Token t) {
    std::size_t start = pos_;
    if (src_[pos_] == '-') bump();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("expected digits after '-'", t.line, t.column);
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      bump();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      bump();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        bump();
    }
    t.kind = Tok::Number;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.number = std::strtod(t.text.c_str(), nullptr);
    return t;
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct ProcessStmt {
  std::string player;
  ProcessExpr expr;
};

struct PayoffStmt {
  std::string player;
  std::vector<PayoffRule> rules;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  ProcessGame game() {
    expect_word("mode");
    Token m = expect(Tok::Ident, "'perfect' or 'imperfect'");
    CommMode mode;
    if (m.text == "perfect") {
      mode = CommMode::None;
    } else if (m.text == "imperfect") {
      mode = CommMode::Join;
    } else {
      fail(m, "expected 'perfect' or 'imperfect', found " + describe(m));
    }

    expect_word("players");
    expect(Tok::Colon, "':'");
    std::vector<std::string> player_names;
    player_names.push_back(name("a player name"));
    while (peek().kind == Tok::Comma) {
      advance();
      player_names.push_back(name("a player name"));
    }

    std::vector<ProcessStmt> processes;
    std::vector<PayoffStmt> payoffs;
    while (peek().kind != Tok::End) {
      Token t = peek();
      if (t.kind == Tok::Ident && t.text == "process") {
        advance();
        std::string who = name("a player name");
        expect(Tok::Assign, "':='");
        processes.push_back({std::move(who), expr()});
      } else if (t.kind == Tok::Ident && t.text == "payoff") {
        advance();
        std::string who = name("a player name");
        expect(Tok::Colon, "':'");
        std::vector<PayoffRule> rules;
        do {
          Formula f = formula();
          expect(Tok::Arrow, "'->'");
          Token v = expect(Tok::Number, "a number");
          rules.push_back({std::move(f), v.number});
        } while (starts_formula(peek()));
        payoffs.push_back({std::move(who), std::move(rules)});
      } else {
        fail(t, "expected 'process' or 'payoff', found " + describe(t));
      }
    }

    return resolve(std::move(player_names), std::move(processes),
                   std::move(payoffs), mode);
  }

  ProcessExpr fragment_expr() {
    ProcessExpr e = expr();
    finish();
    return e;
  }

  Formula fragment_formula() {
    Formula f = formula();
    finish();
    return f;
  }

 private:
  // expr := term ("+" term)*
  ProcessExpr expr() {
    ProcessExpr e = term();
    while (peek().kind == Tok::Plus) {
      advance();
      e = ProcessExpr::choice(std::move(e), term());
    }
    return e;
  }

  // term := factor ("." factor)*
  ProcessExpr term() {
    ProcessExpr e = factor();
    while (peek().kind == Tok::Dot) {
      advance();
      e = ProcessExpr::seq(std::move(e), factor());
    }
    return e;
  }

  ProcessExpr factor() {
    Token t = peek();
    if (t.kind == Tok::LBracket) {
      advance();
      Formula f = formula();
      expect(Tok::RBracket, "']'");
      return ProcessExpr::cond(std::move(f), factor());
    }
    if (t.kind == Tok::LParen) {
      advance();
      ProcessExpr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    return ProcessExpr::act(name("an action name"));
  }

  // formula := conjunct ("|" conjunct)*
  Formula formula() {
    Formula f = conjunct();
    while (peek().kind == Tok::Pipe) {
      advance();
      f = Formula::disjunction(std::move(f), conjunct());
    }
    return f;
  }

  Formula conjunct() {
    Formula f = negation();
    while (peek().kind == Tok::Amp) {
      advance();
      f = Formula::conjunction(std::move(f), negation());
    }
    return f;
  }

  Formula negation() {
    if (peek().kind == Tok::Bang) {
      advance();
      return Formula::negation(negation());
    }
    return formula_atom();
  }

  Formula formula_atom() {
    Token t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "true") {
        advance();
        return Formula::top();
      }
      if (t.text == "pre" || t.text == "mid" || t.text == "pos") {
        advance();
        expect(Tok::LParen, "'('");
        Pattern p = pattern();
        expect(Tok::RParen, "')'");
        if (t.text == "pre") return Formula::pre(std::move(p));
        if (t.text == "mid") return Formula::mid(std::move(p));
        return Formula::pos(std::move(p));
      }
      if (!is_keyword(t.text)) return Formula::exact(pattern());
    }
    fail(t, "expected a formula, found " + describe(t));
  }

  Pattern pattern() {
    Pattern p;
    p.push_back(name("an action name"));
    while (peek().kind == Tok::Dot) {
      advance();
      p.push_back(name("an action name"));
    }
    return p;
  }

  static bool starts_formula(const Token& t) {
    if (t.kind == Tok::Bang || t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Ident) return false;
    return t.text != "process" && t.text != "payoff" && t.text != "mode" &&
           t.text != "players";
  }

  std::string name(const char* what) {
    Token t = expect(Tok::Ident, what);
    if (is_keyword(t.text))
      fail(t, "keyword '" + t.text + "' cannot be used as a name");
    return t.text;
  }

  void expect_word(const std::string& word) {
    Token t = peek();
    if (t.kind != Tok::Ident || t.text != word)
      fail(t, "expected '" + word + "', found " + describe(t));
    advance();
  }

  Token expect(Tok kind, const char* what) {
    Token t = peek();
    if (t.kind != kind)
      fail(t, std::string("expected ") + what + ", found " + describe(t));
    return advance();
  }

  void finish() {
    Token t = peek();
    if (t.kind != Tok::End)
      fail(t, "expected end of input, found " + describe(t));
  }

  const Token& peek() const { return tokens_[pos_]; }

  Token advance() {
    Token t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.column);
  }

  static ProcessGame resolve(std::vector<std::string> player_names,
                             std::vector<ProcessStmt> processes,
                             std::vector<PayoffStmt> payoffs, CommMode mode) {
    std::vector<std::string> problems;
    auto report = [&problems](std::string p) {
      if (std::find(problems.begin(), problems.end(), p) == problems.end())
        problems.push_back(std::move(p));
    };

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < player_names.size(); ++i) {
      if (!index.emplace(player_names[i], i).second)
        report("duplicate player name '" + player_names[i] + "'");
    }

    std::map<std::string, const ProcessExpr*> process_of;
    for (const ProcessStmt& s : processes) {
      if (!index.contains(s.player)) {
        report("process for unknown player '" + s.player + "'");
      } else if (!process_of.emplace(s.player, &s.expr).second) {
        report("duplicate process for player '" + s.player + "'");
      }
    }
    std::map<std::string, const PayoffStmt*> payoff_of;
    for (const PayoffStmt& s : payoffs) {
      if (!index.contains(s.player)) {
        report("payoff for unknown player '" + s.player + "'");
      } else if (!payoff_of.emplace(s.player, &s).second) {
        report("duplicate payoff for player '" + s.player + "'");
      }
    }
    for (const std::string& who : player_names) {
      if (!process_of.contains(who))
        report("missing process for player '" + who + "'");
      if (!payoff_of.contains(who))
        report("missing payoff for player '" + who + "'");
    }

    std::set<std::string> declared;
    for (const auto& [who, e] : process_of) {
      std::set<std::string> used;
      e->collect_action_names(used);
      if (used.contains("tau"))
        report("player '" + who + "' uses the reserved action name 'tau'");
      declared.insert(used.begin(), used.end());
    }
    declared.erase("tau");

    for (const std::string& who : player_names) {
      std::set<std::string> letters;
      if (auto it = process_of.find(who); it != process_of.end())
        it->second->collect_condition_letters(letters);
      if (auto it = payoff_of.find(who); it != payoff_of.end())
        for (const PayoffRule& r : it->second->rules)
          r.condition.collect_letters(letters);
      for (const std::string& letter : letters) {
        if (!declared.contains(letter))
          report("formula of player '" + who + "' mentions '" + letter +
                 "', which names no action of any player");
      }
    }

    if (!problems.empty()) throw SemanticError(std::move(problems));

    std::vector<Player> players;
    players.reserve(player_names.size());
    for (std::size_t i = 0; i < player_names.size(); ++i) {
      const std::string& who = player_names[i];
      TransitionSystem ts =
          expr_to_ts(*process_of.at(who), static_cast<PlayerId>(i));
      PayoffRuleSet rules(who, payoff_of.at(who)->rules);
      players.push_back({who, std::move(ts), std::move(rules)});
    }
    return ProcessGame(std::move(players), mode);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ProcessGame parse_game(std::string_view text) { return Parser(text).game(); }

ProcessExpr parse_process_expr(std::string_view text) {
  return Parser(text).fragment_expr();
}

Formula parse_formula(std::string_view text) {
  return Parser(text).fragment_formula();
}

}  // namespace procgame
