#include <doctest.h>

#include "prism/laws/generators.hpp"
#include "prism/relation.hpp"

using namespace prism;

namespace {

// Brute-force oracles working directly on pair lists, independent of the
// bitset paths they check.
Condition image_oracle(const Relation& r, const Condition& x) {
  std::vector<std::string> out;
  for (const auto& [a, b] : r.pairs())
    if (x.contains(a)) out.push_back(b);
  return Condition::of(r.space(), out);
}

Relation compose_oracle(const Relation& r, const Relation& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : r.pairs())
    for (const auto& [c, d] : s.pairs())
      if (b == c) out.emplace_back(a, d);
  return Relation::of(r.space(), out);
}

}  // namespace

TEST_CASE("image by definition unfold") {
  const StateSpace s({"1", "2", "10", "20"});
  const Relation r = Relation::of(s, {{"1", "10"}, {"1", "20"}, {"2", "10"}});
  const Condition x = Condition::of(s, {"1"});
  CHECK(image(r, x) == Condition::of(s, {"10", "20"}));
  CHECK(image(r, x) == image_oracle(r, x));
  CHECK(image(r, Condition::none(s)).is_empty());
}

TEST_CASE("image of a function-like relation, enumerated") {
  const StateSpace s({"0", "1", "2", "4"});
  const Relation r = Relation::of(s, {{"0", "0"}, {"1", "1"}, {"4", "2"}});
  const Condition x = Condition::of(s, {"1", "4"});
  CHECK(image_oracle(r, x) == Condition::of(s, {"1", "2"}));
  CHECK(image(r, x) == Condition::of(s, {"1", "2"}));
}

TEST_CASE("restriction, corestriction, composition by definition") {
  const StateSpace s({"1", "2", "10", "20"});
  const Relation r = Relation::of(s, {{"1", "10"}, {"2", "20"}});
  CHECK(restrict_rel(r, Condition::of(s, {"1"})) == Relation::of(s, {{"1", "10"}}));
  CHECK(corestrict_rel(r, Condition::of(s, {"20"})) == Relation::of(s, {{"2", "20"}}));

  const Relation left = Relation::of(s, {{"1", "10"}, {"1", "20"}});
  const Relation right = Relation::of(s, {{"10", "10"}});
  CHECK(compose_rel(left, right) == Relation::of(s, {{"1", "10"}}));
  CHECK(compose_rel(left, right) == compose_oracle(left, right));
}

TEST_CASE("space mismatch is a usage error") {
  const StateSpace a({"1"});
  const StateSpace b({"2"});
  const Relation r = Relation::none(a);
  CHECK_THROWS_AS((void)image(r, Condition::all(b)), usage_error);
  CHECK_THROWS_AS((void)compose_rel(r, Relation::none(b)), usage_error);
}

TEST_CASE("relation lemmas over the exhaustive two-state universe") {
  const StateSpace s({"a", "b"});
  const auto relations = enumerate_relations(s);
  const auto conditions = enumerate_conditions(s);
  for (const auto& r : relations) {
    CHECK(image(r, Condition::none(s)).is_empty());
    CHECK(image(r, Condition::all(s)) == r.range());
    CHECK(image(r, r.domain()) == r.range());
    CHECK(r.domain() == r.converse().range());
    CHECK(r.range() == r.converse().domain());
    for (const auto& x : conditions) {
      CHECK(image(r, x) == image_oracle(r, x));
      CHECK(image(r, x).subset_of(r.range()));
      CHECK(restrict_rel(r, x).domain() == (r.domain() & x));
      CHECK(corestrict_rel(r, x).range() == (r.range() & x));
      CHECK(image(r, x) == restrict_rel(r, x).range());
      for (const auto& y : conditions) {
        CHECK(image(r, x & y).subset_of(x.subset_of(y) ? image(r, y) : image(r, x)));
        CHECK(image(r, x | y) == (image(r, x) | image(r, y)));
        CHECK(image(r, x & y).subset_of(image(r, x) & image(r, y)));
      }
    }
    for (const auto& t : relations)
      CHECK(compose_rel(r, t) == compose_oracle(r, t));
  }
}

TEST_CASE("identity and universal constants") {
  const StateSpace s({"a", "b"});
  CHECK(Relation::identity(s).pairs() ==
        std::vector<std::pair<std::string, std::string>>{{"a", "a"}, {"b", "b"}});
  CHECK(Relation::universal(s).count() == 4);
  CHECK(Relation::identity_on(Condition::of(s, {"b"})) ==
        Relation::of(s, {{"b", "b"}}));
  CHECK(Relation::none(s).is_empty());
}

TEST_CASE("function test") {
  const StateSpace s({"a", "b"});
  CHECK(Relation::identity(s).is_function());
  CHECK_FALSE(Relation::universal(s).is_function());
  CHECK(Relation::none(s).is_function());
}
