#pragma once

#include <memory>
#include <set>
#include <string>

#include "procgame/formula.hpp"
#include "procgame/transition_system.hpp"

namespace procgame {

// A finite process term:
//
//   a          one action
//   [f]e       e, with f conjoined onto e's first actions
//   e1.e2      e1, then e2
//   e1+e2      either e1 or e2
//
// There is no recursion, so every term denotes a finite acyclic system.
// Immutable, subterms shared.
class ProcessExpr {
 public:
  enum class Kind { Act, Cond, Seq, Choice };

  static ProcessExpr act(std::string name);
  static ProcessExpr cond(Formula condition, ProcessExpr body);
  static ProcessExpr seq(ProcessExpr first, ProcessExpr then);
  static ProcessExpr choice(ProcessExpr lhs, ProcessExpr rhs);

  Kind kind() const noexcept;
  const std::string& action_name() const;  // Act
  const Formula& condition() const;        // Cond
  ProcessExpr body() const;                // Cond
  ProcessExpr lhs() const;                 // Seq, Choice
  ProcessExpr rhs() const;                 // Seq, Choice

  // Number of action occurrences in the term.
  std::size_t action_occurrences() const noexcept;
  void collect_action_names(std::set<std::string>& into) const;
  void collect_condition_letters(std::set<std::string>& into) const;

  // Canonical text: "." binds tighter than "+", conditions tighter than
  // both, no spaces. Parseable by parse_process_expr.
  std::string str() const;

  friend bool operator==(const ProcessExpr& a, const ProcessExpr& b);

 private:
  struct Node;
  explicit ProcessExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Builds the transition system of a term, owning every action on behalf of
// `owner`. The initial state is never terminating; the states a complete run
// ends in are. Sequential composition funnels all terminating states of the
// first part into one join state, which keeps the state count at or below
// the sum of the parts' state counts. The unfolding of the result is the
// tree of the term's runs.
TransitionSystem expr_to_ts(const ProcessExpr& expr, PlayerId owner);

}  // namespace procgame
