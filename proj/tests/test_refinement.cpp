#include <doctest.h>

#include "prism/laws/generators.hpp"
#include "prism/refinement.hpp"

using namespace prism;

namespace {

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

const StateSpace two({"1", "2"});

}  // namespace

TEST_CASE("refinement parts") {
  const Program p = prog(two, {"1"}, {{"1", "1"}, {"1", "2"}});

  const auto self = refinement_parts(p, p);
  CHECK(self.state_extends);
  CHECK(self.pre_weakens);
  CHECK(self.post_strengthens);

  const Program q = prog(two, {"1", "2"}, {{"1", "1"}});
  const auto parts = refinement_parts(q, p);
  CHECK(parts.pre_weakens);
  CHECK(parts.post_strengthens);
  CHECK(refines(q, p));
}

TEST_CASE("state extension crosses spaces") {
  const StateSpace small({"1"});
  const StateSpace large({"1", "2"});
  const Program p = make_program(small, Condition::all(small), Relation::identity(small));
  const Program q = make_program(large, Condition::all(large), Relation::identity(large));
  CHECK(refinement_parts(q, p).state_extends);
  CHECK_FALSE(refinement_parts(p, q).state_extends);
  CHECK(refines(q, p));
  CHECK_FALSE(refines(p, q));
  // Extra states may carry any behaviour without breaking post-strengthening.
  const Program wild =
      make_program(large, Condition::all(large),
                   Relation::of(large, {{"1", "1"}, {"2", "1"}, {"2", "2"}}));
  CHECK(refines(wild, p));
}

TEST_CASE("orderings of the basic programs") {
  CHECK(refines(infeasible(two), skip(two)));
  CHECK(refines(skip(two), havoc(two)));
  CHECK(refines(havoc(two), fail(two)));

  CHECK(specializes(fail(two), infeasible(two)));
  CHECK(specializes(infeasible(two), skip(two)));
  CHECK(specializes(skip(two), havoc(two)));

  for (const auto& p : enumerate_programs(two)) {
    CHECK(refines(p, restrict(p.pre(), havoc(two))));
    CHECK(specializes(p, restrict(p.pre(), havoc(two))));
    CHECK(refines(p, fail(two)));
    CHECK(specializes(fail(two), p));
  }
}

TEST_CASE("implementation needs feasibility") {
  const Program p = prog(two, {"1"}, {{"1", "1"}});
  CHECK(implements(p, p));
  CHECK_FALSE(implements(infeasible(two), infeasible(two)));
  CHECK(refines(infeasible(two), infeasible(two)));
}

TEST_CASE("contracted programs") {
  const StateSpace zo({"0", "1"});
  const Program q = skip(zo);
  CHECK(correct_for(q, Condition::of(zo, {"0"}),
                    Relation::of(zo, {{"0", "0"}, {"0", "1"}})));
  CHECK_FALSE(correct_for(havoc(zo), Condition::all(zo), Relation::identity(zo)));

  for (const auto& p : enumerate_programs(two)) {
    if (!classify(p).feasible) continue;
    CHECK(correct_for(p, p.pre(), p.post()));
  }
}
