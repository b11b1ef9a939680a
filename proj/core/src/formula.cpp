#include "procgame/formula.hpp"

#include "procgame/errors.hpp"

namespace procgame {

struct Formula::Node {
  Kind kind;
  Pattern pattern;                  // Exact, Pre, Mid, Pos
  std::shared_ptr<const Node> a;    // Not operand, Or/And lhs
  std::shared_ptr<const Node> b;    // Or/And rhs
};

const std::shared_ptr<const Formula::Node>& Formula::true_node() {
  static const std::shared_ptr<const Node> node =
      std::make_shared<Node>(Node{Kind::True, {}, nullptr, nullptr});
  return node;
}

Formula::Formula() : node_(true_node()) {}

Formula Formula::top() { return Formula{}; }

Formula Formula::exact(Pattern pattern) {
  return Formula(std::make_shared<Node>(Node{Kind::Exact, std::move(pattern), nullptr, nullptr}));
}

Formula Formula::pre(Pattern pattern) {
  return Formula(std::make_shared<Node>(Node{Kind::Pre, std::move(pattern), nullptr, nullptr}));
}

Formula Formula::mid(Pattern pattern) {
  return Formula(std::make_shared<Node>(Node{Kind::Mid, std::move(pattern), nullptr, nullptr}));
}

Formula Formula::pos(Pattern pattern) {
  return Formula(std::make_shared<Node>(Node{Kind::Pos, std::move(pattern), nullptr, nullptr}));
}

Formula Formula::exact(const Trace& trace) {
  Pattern pattern;
  pattern.reserve(trace.size());
  for (const ActionLabel& label : trace) pattern.push_back(label.name());
  return exact(std::move(pattern));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, {}, f.node_, nullptr}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  if (lhs.is_true() || rhs.is_true()) return top();
  return Formula(std::make_shared<Node>(Node{Kind::Or, {}, lhs.node_, rhs.node_}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  if (lhs.is_true()) return rhs;
  if (rhs.is_true()) return lhs;
  return Formula(std::make_shared<Node>(Node{Kind::And, {}, lhs.node_, rhs.node_}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Pattern& Formula::pattern() const {
  switch (kind()) {
    case Kind::Exact:
    case Kind::Pre:
    case Kind::Mid:
    case Kind::Pos:
      return node_->pattern;
    default:
      throw Error("formula has no pattern");
  }
}

Formula Formula::operand() const {
  if (kind() != Kind::Not) throw Error("formula has no operand");
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  if (kind() != Kind::Or && kind() != Kind::And) throw Error("formula has no lhs");
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  if (kind() != Kind::Or && kind() != Kind::And) throw Error("formula has no rhs");
  return Formula(node_->b);
}

std::size_t Formula::size() const noexcept {
  switch (kind()) {
    case Kind::True:
      return 1;
    case Kind::Exact:
    case Kind::Pre:
    case Kind::Mid:
    case Kind::Pos:
      return 1 + node_->pattern.size();
    case Kind::Not:
      return 1 + Formula(node_->a).size();
    case Kind::Or:
    case Kind::And:
      return 1 + Formula(node_->a).size() + Formula(node_->b).size();
  }
  return 1;
}

bool Formula::references_only(const std::set<std::string>& declared) const {
  std::set<std::string> letters;
  collect_letters(letters);
  for (const std::string& letter : letters) {
    if (!declared.contains(letter)) return false;
  }
  return true;
}

void Formula::collect_letters(std::set<std::string>& into) const {
  switch (kind()) {
    case Kind::True:
      return;
    case Kind::Exact:
    case Kind::Pre:
    case Kind::Mid:
    case Kind::Pos:
      into.insert(node_->pattern.begin(), node_->pattern.end());
      return;
    case Kind::Not:
      Formula(node_->a).collect_letters(into);
      return;
    case Kind::Or:
    case Kind::And:
      Formula(node_->a).collect_letters(into);
      Formula(node_->b).collect_letters(into);
      return;
  }
}

namespace {

std::string pattern_str(const Pattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) out += '.';
    out += pattern[i];
  }
  return out;
}

// Precedence: Or = 1, And = 2, Not = 3, atoms = 4.
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    case Formula::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, int parent_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::Exact:
      out += pattern_str(f.pattern());
      break;
    case Formula::Kind::Pre:
      out += "pre(" + pattern_str(f.pattern()) + ")";
      break;
    case Formula::Kind::Mid:
      out += "mid(" + pattern_str(f.pattern()) + ")";
      break;
    case Formula::Kind::Pos:
      out += "pos(" + pattern_str(f.pattern()) + ")";
      break;
    case Formula::Kind::Not:
      out += '!';
      print(f.operand(), precedence(Formula::Kind::Not) + 1, out);
      break;
    case Formula::Kind::Or:
      print(f.lhs(), precedence(Formula::Kind::Or), out);
      out += " | ";
      print(f.rhs(), precedence(Formula::Kind::Or) + 1, out);
      break;
    case Formula::Kind::And:
      print(f.lhs(), precedence(Formula::Kind::And), out);
      out += " & ";
      print(f.rhs(), precedence(Formula::Kind::And) + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Exact:
    case Formula::Kind::Pre:
    case Formula::Kind::Mid:
    case Formula::Kind::Pos:
      return a.node_->pattern == b.node_->pattern;
    case Formula::Kind::Not:
      return Formula(a.node_->a) == Formula(b.node_->a);
    case Formula::Kind::Or:
    case Formula::Kind::And:
      return Formula(a.node_->a) == Formula(b.node_->a) &&
             Formula(a.node_->b) == Formula(b.node_->b);
  }
  return false;
}

bool letter_matches(std::string_view letter, const ActionLabel& label) {
  return label.contains_name(letter);
}

namespace {

// The pattern matches the history window starting at `at`.
bool window_matches(const Trace& history, std::size_t at, const Pattern& pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (!letter_matches(pattern[i], history[at + i])) return false;
  }
  return true;
}

}  // namespace

bool satisfies(const Trace& history, const Formula& formula) {
  switch (formula.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Exact: {
      const Pattern& p = formula.pattern();
      return p.size() == history.size() && window_matches(history, 0, p);
    }
    case Formula::Kind::Pre: {
      const Pattern& p = formula.pattern();
      return p.size() <= history.size() && window_matches(history, 0, p);
    }
    case Formula::Kind::Mid: {
      const Pattern& p = formula.pattern();
      if (p.size() > history.size()) return false;
      for (std::size_t at = 0; at + p.size() <= history.size(); ++at) {
        if (window_matches(history, at, p)) return true;
      }
      return false;
    }
    case Formula::Kind::Pos: {
      const Pattern& p = formula.pattern();
      return p.size() <= history.size() &&
             window_matches(history, history.size() - p.size(), p);
    }
    case Formula::Kind::Not:
      return !satisfies(history, formula.operand());
    case Formula::Kind::Or:
      return satisfies(history, formula.lhs()) || satisfies(history, formula.rhs());
    case Formula::Kind::And:
      return satisfies(history, formula.lhs()) && satisfies(history, formula.rhs());
  }
  return false;
}

}  // namespace procgame
