#include "procgame/action.hpp"

#include <algorithm>

#include "procgame/errors.hpp"

namespace procgame {

ActionLabel ActionLabel::tau() { return ActionLabel{}; }

ActionLabel ActionLabel::atomic(std::string name, PlayerId owner) {
  if (name.empty()) throw Error("atomic action needs a name");
  if (owner < 0) throw Error("atomic action needs an owning player");
  ActionLabel label;
  label.atoms_.push_back(Atom{std::move(name), owner});
  return label;
}

ActionLabel ActionLabel::joint(const std::vector<ActionLabel>& parts) {
  ActionLabel label;
  for (const ActionLabel& part : parts) {
    if (part.is_tau()) throw Error("tau cannot take part in a joint action");
    label.atoms_.insert(label.atoms_.end(), part.atoms_.begin(), part.atoms_.end());
  }
  if (label.atoms_.size() < 2) throw Error("a joint action needs at least two atoms");
  std::sort(label.atoms_.begin(), label.atoms_.end());
  std::vector<PlayerId> owners;
  owners.reserve(label.atoms_.size());
  for (const Atom& atom : label.atoms_) owners.push_back(atom.owner);
  std::sort(owners.begin(), owners.end());
  if (std::adjacent_find(owners.begin(), owners.end()) != owners.end()) {
    throw Error("joint action takes at most one atom per player");
  }
  return label;
}

const std::string& ActionLabel::name() const {
  if (!is_atomic()) throw Error("label has no single name");
  return atoms_.front().name;
}

PlayerId ActionLabel::owner() const {
  if (!is_atomic()) throw Error("label has no single owner");
  return atoms_.front().owner;
}

bool ActionLabel::contains_name(std::string_view name) const {
  for (const Atom& atom : atoms_) {
    if (atom.name == name) return true;
  }
  return false;
}

bool ActionLabel::subset_of(const ActionLabel& other) const {
  // Both atom vectors are sorted.
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(),
                       atoms_.end());
}

bool ActionLabel::proper_subset_of(const ActionLabel& other) const {
  return atoms_.size() < other.atoms_.size() && subset_of(other);
}

std::string ActionLabel::str() const {
  if (is_tau()) return "tau";
  if (is_atomic()) return atoms_.front().name;
  std::string out = "{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out += ',';
    out += atoms_[i].name;
  }
  out += '}';
  return out;
}

std::string trace_str(const Trace& trace, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += separator;
    out += trace[i].str();
  }
  return out;
}

}  // namespace procgame
