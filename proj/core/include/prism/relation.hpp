#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prism/condition.hpp"

namespace prism {

/// A binary relation over a state space: a finite set of ordered pairs.
/// Postconditions are relations. The empty and universal relations (False
/// and True in relation position) have named constructors.
class Relation {
 public:
  Relation() = default;

  /// The empty relation over `space`.
  static Relation none(const StateSpace& space);

  /// The universal relation S x S.
  static Relation universal(const StateSpace& space);

  /// The identity relation Id[S].
  static Relation identity(const StateSpace& space);

  /// Id[C]: identity pairs on the members of C.
  static Relation identity_on(const Condition& c);

  /// Relation holding exactly the given (source, target) pairs; names
  /// outside the space are a usage error.
  static Relation of(const StateSpace& space,
                     const std::vector<std::pair<std::string, std::string>>& pairs);

  static Relation from_bits(const StateSpace& space, Bitset bits);

  const StateSpace& space() const { return space_; }
  const Bitset& bits() const { return bits_; }

  bool contains(std::size_t x, std::size_t y) const;
  bool is_empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }

  bool subset_of(const Relation& other) const;

  Condition domain() const;
  Condition range() const;
  Relation converse() const;

  /// True if the relation is a function: at most one pair per source state.
  bool is_function() const;

  /// Pairs in canonical order (sorted by source, then target).
  std::vector<std::pair<std::string, std::string>> pairs() const;

  bool operator==(const Relation& other) const {
    return space_ == other.space_ && bits_ == other.bits_;
  }
  bool operator!=(const Relation& other) const { return !(*this == other); }

  friend Relation operator|(const Relation& a, const Relation& b);
  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator-(const Relation& a, const Relation& b);

 private:
  Relation(StateSpace space, Bitset bits) : space_(std::move(space)), bits_(std::move(bits)) {}

  StateSpace space_;
  Bitset bits_;
};

/// Image r(X): all states reachable from a member of X through r.
Condition image(const Relation& r, const Condition& x);

/// Restriction r / X: pairs whose source lies in X.
Relation restrict_rel(const Relation& r, const Condition& x);

/// Corestriction r \ Y: pairs whose target lies in Y.
Relation corestrict_rel(const Relation& r, const Condition& y);

/// Composition r ; s in order of application.
Relation compose_rel(const Relation& r, const Relation& s);

}  // namespace prism
