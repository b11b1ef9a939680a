#include "procgame/payoff.hpp"

#include "procgame/errors.hpp"

namespace procgame {

PayoffRuleSet::PayoffRuleSet(std::string player_name, std::vector<PayoffRule> rules)
    : player_name_(std::move(player_name)), rules_(std::move(rules)) {}

std::optional<double> PayoffRuleSet::try_evaluate(const Trace& path) const {
  for (const PayoffRule& rule : rules_) {
    if (satisfies(path, rule.condition)) return rule.value;
  }
  return std::nullopt;
}

double PayoffRuleSet::evaluate(const Trace& path) const {
  if (const auto value = try_evaluate(path)) return *value;
  throw NoMatchingRuleError("no payoff rule of player '" + player_name_ +
                            "' matches path \"" + trace_str(path) + "\"");
}

std::size_t PayoffRuleSet::size_metric() const noexcept {
  std::size_t total = rules_.size();
  for (const PayoffRule& rule : rules_) total += rule.condition.size();
  return total;
}

void PayoffRuleSet::collect_letters(std::set<std::string>& into) const {
  for (const PayoffRule& rule : rules_) rule.condition.collect_letters(into);
}

}  // namespace procgame
