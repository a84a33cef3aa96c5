#include "prism/relation.hpp"

#include <algorithm>

#include "prism/error.hpp"

namespace prism {

namespace {

std::size_t pair_index(std::size_t n, std::size_t x, std::size_t y) { return x * n + y; }

}  // namespace

Relation Relation::none(const StateSpace& space) {
  return Relation(space, Bitset(space.size() * space.size()));
}

Relation Relation::universal(const StateSpace& space) {
  Bitset bits(space.size() * space.size());
  bits.set_all();
  return Relation(space, std::move(bits));
}

Relation Relation::identity(const StateSpace& space) {
  Bitset bits(space.size() * space.size());
  for (std::size_t i = 0; i < space.size(); ++i) bits.set(pair_index(space.size(), i, i));
  return Relation(space, std::move(bits));
}

Relation Relation::identity_on(const Condition& c) {
  const auto n = c.space().size();
  Bitset bits(n * n);
  c.bits().for_each_set([&](std::size_t i) { bits.set(pair_index(n, i, i)); });
  return Relation(c.space(), std::move(bits));
}

Relation Relation::of(const StateSpace& space,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  Bitset bits(space.size() * space.size());
  for (const auto& [a, b] : pairs) {
    const auto x = space.index_of(a);
    const auto y = space.index_of(b);
    if (!x) throw usage_error("state '" + a + "' is not in the state space");
    if (!y) throw usage_error("state '" + b + "' is not in the state space");
    bits.set(pair_index(space.size(), *x, *y));
  }
  return Relation(space, std::move(bits));
}

Relation Relation::from_bits(const StateSpace& space, Bitset bits) {
  return Relation(space, std::move(bits));
}

bool Relation::contains(std::size_t x, std::size_t y) const {
  return bits_.test(pair_index(space_.size(), x, y));
}

bool Relation::subset_of(const Relation& other) const {
  require_same_space(space_, other.space_, "relation subset");
  return bits_.is_subset_of(other.bits_);
}

Condition Relation::domain() const {
  const auto n = space_.size();
  Bitset dom(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (bits_.test(pair_index(n, x, y))) {
        dom.set(x);
        break;
      }
  return Condition::from_bits(space_, std::move(dom));
}

Condition Relation::range() const {
  const auto n = space_.size();
  Bitset rng(n);
  bits_.for_each_set([&](std::size_t i) { rng.set(i % n); });
  return Condition::from_bits(space_, std::move(rng));
}

Relation Relation::converse() const {
  const auto n = space_.size();
  Bitset bits(n * n);
  bits_.for_each_set([&](std::size_t i) { bits.set(pair_index(n, i % n, i / n)); });
  return Relation(space_, std::move(bits));
}

bool Relation::is_function() const {
  const auto n = space_.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t row = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (bits_.test(pair_index(n, x, y)) && ++row > 1) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::string>> Relation::pairs() const {
  const auto n = space_.size();
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(bits_.count());
  bits_.for_each_set(
      [&](std::size_t i) { out.emplace_back(space_.name(i / n), space_.name(i % n)); });
  return out;
}

Relation operator|(const Relation& a, const Relation& b) {
  require_same_space(a.space_, b.space_, "relation union");
  return Relation(a.space_, a.bits_ | b.bits_);
}

Relation operator&(const Relation& a, const Relation& b) {
  require_same_space(a.space_, b.space_, "relation intersection");
  return Relation(a.space_, a.bits_ & b.bits_);
}

Relation operator-(const Relation& a, const Relation& b) {
  require_same_space(a.space_, b.space_, "relation difference");
  return Relation(a.space_, a.bits_ - b.bits_);
}

Condition image(const Relation& r, const Condition& x) {
  require_same_space(r.space(), x.space(), "image");
  const auto n = r.space().size();
  Bitset out(n);
  x.bits().for_each_set([&](std::size_t src) {
    for (std::size_t y = 0; y < n; ++y)
      if (r.bits().test(src * n + y)) out.set(y);
  });
  return Condition::from_bits(r.space(), std::move(out));
}

Relation restrict_rel(const Relation& r, const Condition& x) {
  require_same_space(r.space(), x.space(), "relation restriction");
  const auto n = r.space().size();
  Bitset out(n * n);
  x.bits().for_each_set([&](std::size_t src) {
    for (std::size_t y = 0; y < n; ++y)
      if (r.bits().test(src * n + y)) out.set(src * n + y);
  });
  return Relation::from_bits(r.space(), std::move(out));
}

Relation corestrict_rel(const Relation& r, const Condition& y) {
  require_same_space(r.space(), y.space(), "relation corestriction");
  const auto n = r.space().size();
  Bitset out = r.bits();
  for (std::size_t i = 0; i < n * n; ++i)
    if (out.test(i) && !y.bits().test(i % n)) out.reset(i);
  return Relation::from_bits(r.space(), std::move(out));
}

Relation compose_rel(const Relation& r, const Relation& s) {
  require_same_space(r.space(), s.space(), "relation composition");
  const auto n = r.space().size();
  Bitset out(n * n);
  r.bits().for_each_set([&](std::size_t i) {
    const std::size_t x = i / n, y = i % n;
    for (std::size_t z = 0; z < n; ++z)
      if (s.bits().test(y * n + z)) out.set(x * n + z);
  });
  return Relation::from_bits(r.space(), std::move(out));
}

}  // namespace prism
