#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace procgame {

// Players are identified by their position in the game's player list.
using PlayerId = int;

// Owner value of the silent action.
inline constexpr PlayerId kNoOwner = -1;

// One player's contribution to a label. Two atoms are the same action only if
// both name and owner coincide; distinct players may reuse a name (the veto
// game does), and such occurrences are distinct actions that merely print
// alike.
struct Atom {
  std::string name;
  PlayerId owner = kNoOwner;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// A transition label: the silent action tau, a single player's atomic action,
// or a joint action written as the set of atomic actions performed at once.
//
// Joint labels compare as sets; the atom vector is kept sorted so equality and
// ordering are structural. A joint label holds at least two atoms, all from
// distinct players, and never contains tau.
class ActionLabel {
 public:
  // Default-constructed labels are tau; containers need this.
  ActionLabel() = default;

  static ActionLabel tau();
  static ActionLabel atomic(std::string name, PlayerId owner);
  // Flattens the given labels into one joint label. Throws Error if fewer
  // than two atoms result, if any part is tau, or if two atoms share an owner.
  static ActionLabel joint(const std::vector<ActionLabel>& parts);

  bool is_tau() const noexcept { return atoms_.empty(); }
  bool is_atomic() const noexcept { return atoms_.size() == 1; }
  bool is_joint() const noexcept { return atoms_.size() >= 2; }

  // Name and owner of an atomic label; do not call on tau or joint labels.
  const std::string& name() const;
  PlayerId owner() const;

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t arity() const noexcept { return atoms_.size(); }

  bool contains_name(std::string_view name) const;
  // Set inclusion of atoms; every label includes itself.
  bool subset_of(const ActionLabel& other) const;
  bool proper_subset_of(const ActionLabel& other) const;

  // Display form: "tau", the atomic name, or "{A,B}" sorted by name.
  std::string str() const;

  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
  friend auto operator<=>(const ActionLabel&, const ActionLabel&) = default;

 private:
  std::vector<Atom> atoms_;  // sorted; empty encodes tau
};

// A finite sequence of labels. The empty trace is the history of a root state.
using Trace = std::vector<ActionLabel>;

std::string trace_str(const Trace& trace, std::string_view separator = " ");

}  // namespace procgame
