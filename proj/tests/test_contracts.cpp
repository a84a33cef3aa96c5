#include <doctest.h>

#include "prism/contracts.hpp"
#include "prism/laws/generators.hpp"
#include "prism/ops.hpp"
#include "prism/refinement.hpp"

using namespace prism;

namespace {

const StateSpace two({"1", "2"});

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

}  // namespace

TEST_CASE("strongest postcondition") {
  const Program p = prog(two, {"1"}, {{"1", "1"}, {"2", "2"}});
  CHECK(sp(p, Condition::all(two)) == p.post());
  CHECK(sp(fail(two), Condition::of(two, {"1"})) == Relation::none(two));
  CHECK(sp(p, Condition::none(two)) == Relation::none(two));

  // Havoc sp C = Univ / C = C x S.
  const Condition c = Condition::of(two, {"1"});
  CHECK(sp(havoc(two), c) == Relation::of(two, {{"1", "1"}, {"1", "2"}}));
}

TEST_CASE("weakest precondition") {
  const Program p = prog(two, {"1", "2"}, {{"1", "1"}, {"1", "2"}, {"2", "2"}});
  const Relation r = Relation::of(two, {{"1", "1"}, {"2", "2"}});
  CHECK(wp(p, r) == Condition::of(two, {"2"}));

  CHECK(wp(p, Relation::universal(two)) == p.pre());
  CHECK(wp(fail(two), r).is_empty());
  CHECK(wp(p, Relation::none(two)) == (p.pre() - p.post().domain()));
  CHECK(wp(infeasible(two), Relation::none(two)) == Condition::all(two));
}

TEST_CASE("characterization through implementations") {
  std::mt19937_64 rng(23);
  const StateSpace three({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    const Program p = gen_program(rng, three);
    const Program q = gen_refinement(rng, p);
    if (!implements(q, p)) continue;
    CHECK(sp(q, p.pre()).subset_of(p.post()));
    CHECK(p.pre().subset_of(wp(q, p.post())));
  }
}
