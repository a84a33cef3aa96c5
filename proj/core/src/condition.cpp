#include "prism/condition.hpp"

#include "prism/error.hpp"

namespace prism {

Condition Condition::none(const StateSpace& space) {
  return Condition(space, Bitset(space.size()));
}

Condition Condition::all(const StateSpace& space) {
  Bitset bits(space.size());
  bits.set_all();
  return Condition(space, std::move(bits));
}

Condition Condition::of(const StateSpace& space, const std::vector<std::string>& names) {
  Bitset bits(space.size());
  for (const auto& n : names) {
    const auto i = space.index_of(n);
    if (!i) throw usage_error("state '" + n + "' is not in the state space");
    bits.set(*i);
  }
  return Condition(space, std::move(bits));
}

Condition Condition::from_bits(const StateSpace& space, Bitset bits) {
  return Condition(space, std::move(bits));
}

bool Condition::contains(std::string_view name) const {
  const auto i = space_.index_of(name);
  return i && bits_.test(*i);
}

bool Condition::subset_of(const Condition& other) const {
  require_same_space(space_, other.space_, "subset");
  return bits_.is_subset_of(other.bits_);
}

std::vector<std::string> Condition::names() const {
  std::vector<std::string> out;
  out.reserve(bits_.count());
  bits_.for_each_set([&](std::size_t i) { out.push_back(space_.name(i)); });
  return out;
}

Condition operator|(const Condition& a, const Condition& b) {
  require_same_space(a.space_, b.space_, "condition union");
  return Condition(a.space_, a.bits_ | b.bits_);
}

Condition operator&(const Condition& a, const Condition& b) {
  require_same_space(a.space_, b.space_, "condition intersection");
  return Condition(a.space_, a.bits_ & b.bits_);
}

Condition operator-(const Condition& a, const Condition& b) {
  require_same_space(a.space_, b.space_, "condition difference");
  return Condition(a.space_, a.bits_ - b.bits_);
}

Condition operator~(const Condition& a) {
  Bitset bits = a.bits_;
  bits.flip_all();
  return Condition(a.space_, std::move(bits));
}

}  // namespace prism
