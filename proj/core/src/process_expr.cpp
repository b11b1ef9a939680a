#include "procgame/process_expr.hpp"

#include "procgame/errors.hpp"

namespace procgame {

struct ProcessExpr::Node {
  Kind kind;
  std::string name;                 // Act
  Formula condition;                // Cond
  std::shared_ptr<const Node> a;    // Cond body, Seq/Choice lhs
  std::shared_ptr<const Node> b;    // Seq/Choice rhs
};

ProcessExpr ProcessExpr::act(std::string name) {
  if (name.empty()) throw Error("action name cannot be empty");
  return ProcessExpr(std::make_shared<Node>(
      Node{Kind::Act, std::move(name), Formula::top(), nullptr, nullptr}));
}

ProcessExpr ProcessExpr::cond(Formula condition, ProcessExpr body) {
  return ProcessExpr(std::make_shared<Node>(
      Node{Kind::Cond, {}, std::move(condition), body.node_, nullptr}));
}

ProcessExpr ProcessExpr::seq(ProcessExpr first, ProcessExpr then) {
  return ProcessExpr(std::make_shared<Node>(
      Node{Kind::Seq, {}, Formula::top(), first.node_, then.node_}));
}

ProcessExpr ProcessExpr::choice(ProcessExpr lhs, ProcessExpr rhs) {
  return ProcessExpr(std::make_shared<Node>(
      Node{Kind::Choice, {}, Formula::top(), lhs.node_, rhs.node_}));
}

ProcessExpr::Kind ProcessExpr::kind() const noexcept { return node_->kind; }

const std::string& ProcessExpr::action_name() const {
  if (kind() != Kind::Act) throw Error("term is not an action");
  return node_->name;
}

const Formula& ProcessExpr::condition() const {
  if (kind() != Kind::Cond) throw Error("term has no condition");
  return node_->condition;
}

ProcessExpr ProcessExpr::body() const {
  if (kind() != Kind::Cond) throw Error("term has no body");
  return ProcessExpr(node_->a);
}

ProcessExpr ProcessExpr::lhs() const {
  if (kind() != Kind::Seq && kind() != Kind::Choice) throw Error("term has no lhs");
  return ProcessExpr(node_->a);
}

ProcessExpr ProcessExpr::rhs() const {
  if (kind() != Kind::Seq && kind() != Kind::Choice) throw Error("term has no rhs");
  return ProcessExpr(node_->b);
}

std::size_t ProcessExpr::action_occurrences() const noexcept {
  switch (kind()) {
    case Kind::Act:
      return 1;
    case Kind::Cond:
      return body().action_occurrences();
    case Kind::Seq:
    case Kind::Choice:
      return lhs().action_occurrences() + rhs().action_occurrences();
  }
  return 0;
}

void ProcessExpr::collect_action_names(std::set<std::string>& into) const {
  switch (kind()) {
    case Kind::Act:
      into.insert(node_->name);
      return;
    case Kind::Cond:
      body().collect_action_names(into);
      return;
    case Kind::Seq:
    case Kind::Choice:
      lhs().collect_action_names(into);
      rhs().collect_action_names(into);
      return;
  }
}

void ProcessExpr::collect_condition_letters(std::set<std::string>& into) const {
  switch (kind()) {
    case Kind::Act:
      return;
    case Kind::Cond:
      condition().collect_letters(into);
      body().collect_condition_letters(into);
      return;
    case Kind::Seq:
    case Kind::Choice:
      lhs().collect_condition_letters(into);
      rhs().collect_condition_letters(into);
      return;
  }
}

namespace {

// Precedence: Choice = 1, Seq = 2, Cond = 3, Act = 4.
int precedence(ProcessExpr::Kind kind) {
  switch (kind) {
    case ProcessExpr::Kind::Choice:
      return 1;
    case ProcessExpr::Kind::Seq:
      return 2;
    case ProcessExpr::Kind::Cond:
      return 3;
    default:
      return 4;
  }
}

void print(const ProcessExpr& e, int parent_prec, std::string& out) {
  const int prec = precedence(e.kind());
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e.kind()) {
    case ProcessExpr::Kind::Act:
      out += e.action_name();
      break;
    case ProcessExpr::Kind::Cond:
      out += '[';
      out += e.condition().str();
      out += ']';
      print(e.body(), precedence(ProcessExpr::Kind::Cond), out);
      break;
    case ProcessExpr::Kind::Seq:
      print(e.lhs(), precedence(ProcessExpr::Kind::Seq), out);
      out += '.';
      print(e.rhs(), precedence(ProcessExpr::Kind::Seq), out);
      break;
    case ProcessExpr::Kind::Choice:
      print(e.lhs(), precedence(ProcessExpr::Kind::Choice), out);
      out += '+';
      print(e.rhs(), precedence(ProcessExpr::Kind::Choice), out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string ProcessExpr::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const ProcessExpr& a, const ProcessExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ProcessExpr::Kind::Act:
      return a.node_->name == b.node_->name;
    case ProcessExpr::Kind::Cond:
      return a.node_->condition == b.node_->condition && a.body() == b.body();
    case ProcessExpr::Kind::Seq:
    case ProcessExpr::Kind::Choice:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

struct Piece {
  StateId entry;
  std::vector<StateId> exits;
};

Piece build(const ProcessExpr& e, PlayerId owner, TransitionSystemBuilder& b) {
  switch (e.kind()) {
    case ProcessExpr::Kind::Act: {
      const StateId entry = b.add_state();
      const StateId exit = b.add_state("after " + e.action_name());
      b.add_transition(entry, Formula::top(),
                       ActionLabel::atomic(e.action_name(), owner), exit);
      return Piece{entry, {exit}};
    }
    case ProcessExpr::Kind::Cond: {
      Piece body = build(e.body(), owner, b);
      b.guard_outgoing(body.entry, e.condition());
      return body;
    }
    case ProcessExpr::Kind::Seq: {
      Piece first = build(e.lhs(), owner, b);
      Piece then = build(e.rhs(), owner, b);
      // All ends of the first part become the start of the second.
      for (const StateId exit : first.exits) {
        b.redirect_into(exit, then.entry);
        if (exit == first.entry) first.entry = then.entry;
      }
      return Piece{first.entry, std::move(then.exits)};
    }
    case ProcessExpr::Kind::Choice: {
      Piece lhs = build(e.lhs(), owner, b);
      Piece rhs = build(e.rhs(), owner, b);
      b.merge_outgoing_into(rhs.entry, lhs.entry);
      std::vector<StateId> exits = std::move(lhs.exits);
      for (StateId exit : rhs.exits) {
        exits.push_back(exit == rhs.entry ? lhs.entry : exit);
      }
      return Piece{lhs.entry, std::move(exits)};
    }
  }
  throw Error("unreachable");
}

}  // namespace

TransitionSystem expr_to_ts(const ProcessExpr& expr, PlayerId owner) {
  TransitionSystemBuilder b;
  Piece piece = build(expr, owner, b);
  b.set_initial(piece.entry);
  for (const StateId exit : piece.exits) b.set_terminating(exit);
  return b.build();
}

}  // namespace procgame
