#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "procgame/formula.hpp"

namespace procgame {

struct PayoffRule {
  Formula condition;
  double value = 0.0;
};

// A player's payoff function: an ordered rule list evaluated against the
// complete root-to-leaf trace. The first rule whose condition the trace
// satisfies decides; evaluation fails when no rule matches.
class PayoffRuleSet {
 public:
  PayoffRuleSet() = default;
  PayoffRuleSet(std::string player_name, std::vector<PayoffRule> rules);

  const std::string& player_name() const noexcept { return player_name_; }
  std::span<const PayoffRule> rules() const noexcept { return rules_; }

  std::optional<double> try_evaluate(const Trace& path) const;
  // Throws NoMatchingRuleError naming the player and the path.
  double evaluate(const Trace& path) const;

  // Rule count plus the sizes of all rule conditions.
  std::size_t size_metric() const noexcept;

  void collect_letters(std::set<std::string>& into) const;

 private:
  std::string player_name_;
  std::vector<PayoffRule> rules_;
};

}  // namespace procgame
