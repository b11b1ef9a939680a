#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "procgame/action.hpp"

namespace procgame {

// Letters of a sequence pattern. A letter is an action name; it matches a
// history label when that label, read as a set of atoms, contains an atom of
// that name. On purely atomic histories this is plain equality, and it lets a
// pattern written over atomic names also recognise the same action inside a
// joint move.
using Pattern = std::vector<std::string>;

// Conditions over the history of a state.
//
//   true        holds everywhere
//   sigma       the history is exactly sigma
//   pre(sigma)  sigma is a prefix of the history
//   mid(sigma)  sigma occurs contiguously somewhere in the history
//   pos(sigma)  sigma is a suffix of the history
//   !f, f|g, f&g  the usual connectives
//
// Values are immutable and cheap to copy; subterms are shared. Conjunction
// and disjunction fold the constant true, nothing else is simplified.
// Safe to share across threads once constructed.
class Formula {
 public:
  enum class Kind { True, Exact, Pre, Mid, Pos, Not, Or, And };

  Formula();  // true

  static Formula top();
  static Formula exact(Pattern pattern);
  static Formula pre(Pattern pattern);
  static Formula mid(Pattern pattern);
  static Formula pos(Pattern pattern);
  // Convenience: builds the pattern from the names of atomic labels.
  static Formula exact(const Trace& trace);
  static Formula negation(Formula f);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  bool is_true() const noexcept { return kind() == Kind::True; }

  const Pattern& pattern() const;  // Exact, Pre, Mid, Pos
  Formula operand() const;         // Not
  Formula lhs() const;             // Or, And
  Formula rhs() const;             // Or, And

  // Node count, letters included. Used by size reports.
  std::size_t size() const noexcept;

  // True when every letter occurs in `declared`.
  bool references_only(const std::set<std::string>& declared) const;
  void collect_letters(std::set<std::string>& into) const;

  // Canonical text, parseable by parse_formula. "!" binds tighter than "&",
  // which binds tighter than "|".
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static const std::shared_ptr<const Node>& true_node();

  std::shared_ptr<const Node> node_;
};

// True when one letter matches one history label (see Pattern).
bool letter_matches(std::string_view letter, const ActionLabel& label);

// Satisfaction of a condition by a history. Total.
bool satisfies(const Trace& history, const Formula& formula);

}  // namespace procgame
