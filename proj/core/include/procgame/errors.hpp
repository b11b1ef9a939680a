#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace procgame {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in game-file text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// One or more problems found while resolving a syntactically valid game file,
// e.g. a payoff rule that mentions an action no process declares.
class SemanticError : public Error {
 public:
  explicit SemanticError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += '\n';
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

// Raised by history_of when a state is reachable by two distinct traces.
class AmbiguousHistoryError : public Error {
 public:
  using Error::Error;
};

// Raised when two composed components carry the very same atomic label.
class AlphabetOverlapError : public Error {
 public:
  using Error::Error;
};

// Raised when no payoff rule of a player matches a complete path.
class NoMatchingRuleError : public Error {
 public:
  using Error::Error;
};

// Raised when an exact traversal would exceed its node budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace procgame
