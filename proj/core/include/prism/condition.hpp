#pragma once

#include <string>
#include <vector>

#include "prism/bitset.hpp"
#include "prism/space.hpp"

namespace prism {

/// A condition: a subset of a state space. Conditions double as
/// preconditions and as the guards of restriction, corestriction and
/// conditionals. True is the whole space, False the empty subset.
class Condition {
 public:
  Condition() = default;

  /// The empty condition (False) over `space`.
  static Condition none(const StateSpace& space);

  /// The full condition (True) over `space`.
  static Condition all(const StateSpace& space);

  /// Condition holding exactly the given state names; unknown names are a
  /// usage error.
  static Condition of(const StateSpace& space, const std::vector<std::string>& names);

  static Condition from_bits(const StateSpace& space, Bitset bits);

  const StateSpace& space() const { return space_; }
  const Bitset& bits() const { return bits_; }

  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(std::string_view name) const;
  bool is_empty() const { return bits_.none(); }
  bool is_all() const { return bits_.count() == space_.size(); }
  std::size_t count() const { return bits_.count(); }

  bool subset_of(const Condition& other) const;

  /// Member names in canonical (sorted) order.
  std::vector<std::string> names() const;

  bool operator==(const Condition& other) const {
    return space_ == other.space_ && bits_ == other.bits_;
  }
  bool operator!=(const Condition& other) const { return !(*this == other); }

  friend Condition operator|(const Condition& a, const Condition& b);
  friend Condition operator&(const Condition& a, const Condition& b);
  friend Condition operator-(const Condition& a, const Condition& b);

  /// Complement within the space (set complement; the conditions' "not").
  friend Condition operator~(const Condition& a);

 private:
  Condition(StateSpace space, Bitset bits) : space_(std::move(space)), bits_(std::move(bits)) {}

  StateSpace space_;
  Bitset bits_;
};

}  // namespace prism
