#include <doctest.h>

#include "prism/json_io.hpp"
#include "prism/laws/generators.hpp"
#include "prism/ops.hpp"

using namespace prism;

namespace {

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

const StateSpace two({"1", "2"});

}  // namespace

TEST_CASE("construction validates the space") {
  const StateSpace s({"1", "2"});
  CHECK_THROWS_AS((void)Condition::of(s, {"3"}), usage_error);
  CHECK_THROWS_AS((void)Relation::of(s, {{"1", "3"}}), usage_error);
  CHECK_THROWS_AS((void)StateSpace({"1", "1"}), usage_error);
  const StateSpace other({"1", "2"});
  // Equal contents, distinct objects: still one space.
  CHECK(s == other);
  const Program p = make_program(s, Condition::all(other), Relation::identity(s));
  CHECK(p.pre().is_all());
}

TEST_CASE("square-root miniature classifies as feasible, unrounded, deterministic") {
  const StateSpace s({"0", "1", "4", "2", "20"});
  const Program p = prog(s, {"1", "4"}, {{"0", "0"}, {"1", "1"}, {"4", "2"}});
  const auto c = classify(p);
  CHECK(c.feasible);
  CHECK_FALSE(c.rounded);
  CHECK_FALSE(c.exact);
  CHECK_FALSE(c.total);
  CHECK(c.deterministic);
}

TEST_CASE("classification of basic programs") {
  const auto h = classify(havoc(two));
  CHECK(h.feasible);
  CHECK(h.rounded);
  CHECK(h.total);
  CHECK_FALSE(h.deterministic);

  const auto inf = classify(infeasible(two));
  CHECK_FALSE(inf.feasible);
  CHECK(inf.rounded);
  CHECK_FALSE(inf.total);

  // Over the empty space everything collapses and total holds vacuously.
  const StateSpace empty;
  CHECK(skip(empty) == fail(empty));
  const auto e = classify(skip(empty));
  CHECK(e.feasible);
  CHECK(e.total);
  CHECK(e.deterministic);
}

TEST_CASE("usable range") {
  CHECK(prog_range(prog(two, {"1"}, {{"1", "1"}, {"2", "1"}})) ==
        Condition::of(two, {"1"}));
  CHECK(prog_range(skip(two)).is_all());
  CHECK(prog_range(fail(two)).is_empty());
  for (const auto& p : enumerate_programs(two))
    CHECK(prog_range(p) == image(p.post(), p.pre()));
}

TEST_CASE("versions: trim, round, exact") {
  // Rounding a program with an unreachable pair empties the postcondition.
  const Program dead = prog(two, {}, {{"1", "1"}});
  CHECK(version(dead, VersionMode::round) == fail(two));

  const StateSpace s({"0", "1", "4", "2", "20"});
  const Program miniature =
      make_program(s, Condition::all(s),
                   Relation::of(s, {{"0", "0"}, {"1", "1"}, {"4", "2"}}));
  CHECK(version(miniature, VersionMode::trim).pre() ==
        Condition::of(s, {"0", "1", "4"}));

  for (const auto& p : enumerate_programs(two)) {
    CHECK(classify(version(p, VersionMode::trim)).feasible);
    CHECK(classify(version(p, VersionMode::round)).rounded);
    CHECK(classify(version(p, VersionMode::exact)).exact);
    if (classify(p).exact) {
      CHECK(version(p, VersionMode::trim) == p);
      CHECK(version(p, VersionMode::round) == p);
      CHECK(version(p, VersionMode::exact) == p);
    }
    if (classify(p).feasible) CHECK(classify(version(p, VersionMode::round)).feasible);
    if (classify(p).rounded) CHECK(classify(version(p, VersionMode::trim)).rounded);
  }
}

TEST_CASE("equality and equivalence") {
  const Program p = prog(two, {}, {{"1", "1"}});
  CHECK_FALSE(equal(p, fail(two)));
  CHECK(equivalent(p, fail(two)));
  CHECK(equal(p, p));
  CHECK(equivalent(p, p));
  CHECK(equivalent(prog(two, {"1"}, {{"1", "1"}, {"2", "2"}}),
                   prog(two, {"1"}, {{"1", "1"}})));
  // Different spaces never compare equal.
  const StateSpace other({"1", "2", "3"});
  CHECK_FALSE(equal(fail(two), fail(other)));
  CHECK_FALSE(equivalent(fail(two), fail(other)));
}

TEST_CASE("restriction and corestriction of programs") {
  const Program p = prog(two, {"1", "2"}, {{"1", "1"}, {"2", "2"}});
  CHECK(restrict(Condition::all(two), p) == p);
  CHECK(equivalent(restrict(Condition::none(two), p), fail(two)));
  CHECK(restrict(Condition::of(two, {"1"}), p) == prog(two, {"1"}, {{"1", "1"}}));

  const Program q = prog(two, {"1"}, {{"1", "1"}, {"1", "2"}});
  CHECK(corestrict(q, Condition::of(two, {"2"})) == prog(two, {"1"}, {{"1", "2"}}));
  CHECK(corestrict(q, Condition::none(two)) == prog(two, {"1"}, {}));
  CHECK(equivalent(corestrict(q, Condition::all(two)), q));
}

TEST_CASE("choice rounds its operands before the union") {
  const Program p = prog(two, {"1"}, {{"1", "1"}, {"2", "1"}});
  const Program q = prog(two, {"2"}, {{"2", "2"}});
  const Program angelic = choice(p, q);
  CHECK(angelic == prog(two, {"1", "2"}, {{"1", "1"}, {"2", "2"}}));
  CHECK_FALSE(angelic.post().contains(1, 0));  // the dead pair [2,1] stays dead

  const Program demonic = choice(p, q, ChoiceMode::demonic);
  CHECK(demonic.pre().is_empty());
  CHECK(demonic.post() == angelic.post());

  CHECK(equivalent(choice(p, fail(two)), p));
}

TEST_CASE("composition cannot resuscitate dead pairs") {
  const StateSpace s({"1", "10", "20", "1000"});
  const Program p = prog(s, {"1"}, {{"1", "10"}, {"1", "20"}});
  const Program q = prog(s, {"10"}, {{"10", "10"}, {"20", "1000"}});
  const Program composed = compose(p, q);
  CHECK(composed == prog(s, {"1"}, {{"1", "10"}}));
  CHECK_FALSE(composed.post().contains(*s.index_of("1"), *s.index_of("1000")));

  const Program feasible_p = prog(two, {"1"}, {{"1", "2"}});
  CHECK(compose(feasible_p, skip(two)) == feasible_p);
  CHECK(compose(fail(two), feasible_p) == fail(two));
  CHECK(compose(feasible_p, fail(two)) == fail(two));
}

TEST_CASE("basic programs and their restricted variants") {
  CHECK(basic(two, BasicKind::skip, Condition::none(two)) == fail(two));
  const Condition none = Condition::none(two);
  CHECK(basic(two, BasicKind::fail, none) == basic(two, BasicKind::infeasible, none));
  CHECK(basic(two, BasicKind::infeasible, none) == basic(two, BasicKind::skip, none));
  CHECK(basic(two, BasicKind::skip, none) == basic(two, BasicKind::havoc, none));

  const StateSpace ab({"a", "b"});
  CHECK(havoc(ab) ==
        prog(ab, {"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}}));
  const Condition c = Condition::of(ab, {"a"});
  CHECK(basic(ab, BasicKind::skip, c) ==
        make_program(ab, c, Relation::identity_on(c)));
}

TEST_CASE("feasible corestriction repairs feasibility") {
  for (const auto& p : enumerate_programs(two)) {
    if (!classify(p).feasible) continue;
    for (const auto& c : enumerate_conditions(two))
      CHECK(classify(feasible_corestrict(p, c)).feasible);
  }
}

TEST_CASE("program JSON is canonical and round-trips") {
  const Program p = prog(two, {"2", "1"}, {{"2", "2"}, {"1", "1"}});
  const std::string json = to_json(p);
  CHECK(json ==
        R"({"space":["1","2"],"pre":["1","2"],"post":[["1","1"],["2","2"]]})");
  CHECK(program_from_json(json) == p);

  const Relation r = Relation::of(two, {{"2", "1"}});
  CHECK(to_json(r) == R"({"space":["1","2"],"pairs":[["2","1"]]})");
  CHECK(relation_from_json(to_json(r)) == r);
  CHECK(condition_from_json(to_json(p.pre())) == p.pre());

  CHECK_THROWS_AS((void)program_from_json("{"), usage_error);
  CHECK_THROWS_AS((void)program_from_json(R"({"space":["1"],"pre":["2"],"post":[]})"),
                  usage_error);
}
