#include <doctest.h>

#include <fstream>
#include <set>

#include "prism/json_io.hpp"
#include "prism/laws/checker.hpp"

using namespace prism;

namespace {

const StateSpace two({"1", "2"});

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

}  // namespace

TEST_CASE("program enumeration counts") {
  CHECK(enumerate_programs(StateSpace()).size() == 1);
  CHECK(enumerate_programs(StateSpace({"a"})).size() == 4);
  CHECK(enumerate_programs(two).size() == 64);
  CHECK_THROWS_AS((void)enumerate_programs(StateSpace({"a", "b", "c"})), usage_error);

  // No duplicates.
  std::set<std::string> seen;
  for (const auto& p : enumerate_programs(two)) seen.insert(to_json(p));
  CHECK(seen.size() == 64);
}

TEST_CASE("program generator is deterministic and honors constraints") {
  const StateSpace three({"a", "b", "c"});
  CHECK(gen_program(three, 42) == gen_program(three, 42));
  CHECK(gen_program(three, 42, {.feasible = true}) ==
        gen_program(three, 42, {.feasible = true}));

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    CHECK(classify(gen_program(three, seed, {.rounded = true})).rounded);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK(classify(gen_program(three, seed, {.feasible = true})).feasible);
    const GenConstraints both{.feasible = true, .rounded = true};
    CHECK(classify(gen_program(three, seed, both)).exact);
    GenConstraints nonempty;
    nonempty.pre_nonempty = true;
    CHECK_FALSE(gen_program(three, seed, nonempty).pre().is_empty());
  }
  GenConstraints nonempty;
  nonempty.pre_nonempty = true;
  CHECK_THROWS_AS((void)gen_program(StateSpace(), 1, nonempty), usage_error);
}

TEST_CASE("registry matches the checked-in manifest") {
  std::ifstream in(PRISM_MANIFEST_PATH);
  REQUIRE(in.good());
  std::set<std::string> manifest;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) manifest.insert(line);

  std::set<std::string> registry;
  for (const auto& law : law_registry()) {
    CAPTURE(law.id);
    CHECK(registry.insert(law.id).second);  // ids unique
    if (law.law_class == LawClass::asserted) {
      CHECK(law.check != nullptr);
    } else {
      CHECK(law.audit_check != nullptr);
      CHECK_FALSE(law.facets.empty());
    }
  }
  CHECK(registry == manifest);
  CHECK(registry.size() == 137);
}

TEST_CASE("check_law runs an exhaustive universe") {
  const LawReport report = check_law("Choice_commute", {.space_size = 2});
  CHECK(report.status == LawStatus::pass);
  CHECK(report.universe.cases == 64 * 64);
  CHECK(report.universe.exhaustive);
  CHECK_THROWS_AS((void)check_law("No_such_law", {}), usage_error);
}

TEST_CASE("choice idempotence witness separates equality from equivalence") {
  const Program p = prog(two, {}, {{"1", "1"}});
  CHECK(choice(p, p) == fail(two));
  CHECK(equivalent(choice(p, p), p));
  CHECK_FALSE(equal(choice(p, p), p));
  CHECK(check_law("Choice_idem", {.space_size = 2}).status == LawStatus::pass);
}

TEST_CASE("left distribution witness separates equality from equivalence") {
  const Program w = prog(two, {"1"}, {{"1", "1"}, {"2", "1"}});
  const Program lhs = compose(w, choice(w, w));
  const Program rhs = choice(compose(w, w), compose(w, w));
  CHECK_FALSE(equal(lhs, rhs));
  CHECK(equivalent(lhs, rhs));
  CHECK(lhs.post().contains(1, 0));        // [2,1] survives on the left
  CHECK_FALSE(rhs.post().contains(1, 0));  // choice removes it on the right
}

TEST_CASE("audit law reports facets with a replayable counterexample") {
  const LawReport report = check_law("Corestrict_false", {.space_size = 2});
  CHECK(report.status == LawStatus::audit_note);
  CHECK(report.note.find("equality as displayed: fails") != std::string::npos);
  REQUIRE_FALSE(report.counterexample_json.empty());

  const LawSpec* law = find_law("Corestrict_false");
  REQUIRE(law != nullptr);
  const LawCase replay = case_from_json(*law, report.counterexample_json);
  // Re-running the reported case reproduces the violation.
  CHECK(law->audit_check(replay) != 3u);
}

TEST_CASE("shrinking reaches a local minimum that still fails") {
  // A deliberately false claim: every program is deterministic.
  LawSpec fake;
  fake.id = "fake";
  fake.signature = {OperandKind::program};
  fake.check = [](const LawCase& t) { return classify(t.p(0)).deterministic; };

  const StateSpace four({"a", "b", "c", "d"});
  LawCase seed;
  seed.space = four;
  seed.programs.push_back(make_program(
      four, Condition::all(four),
      Relation::of(four,
                   {{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})));
  const auto fails = [&fake](const LawCase& c) { return !fake.check(c); };
  REQUIRE(fails(seed));
  const LawCase minimal = shrink_to_minimal(seed, fails);
  CHECK(fails(minimal));
  // Nondeterminism needs one state with two successors: one source, two
  // targets, no removable precondition states beyond dom(post)'s needs.
  CHECK(minimal.space.size() == 2);
  CHECK(minimal.programs[0].post().count() == 2);
  CHECK(minimal.programs[0].pre().count() <= 1);
}

TEST_CASE("a failing asserted law yields a shrunk, replayable counterexample") {
  LawSpec false_law;
  false_law.id = "every program is rounded";
  false_law.signature = {OperandKind::program};
  false_law.check = [](const LawCase& t) { return classify(t.p(0)).rounded; };

  const LawReport report = check_law(false_law, {.space_size = 2});
  REQUIRE(report.status == LawStatus::fail);
  REQUIRE_FALSE(report.counterexample_json.empty());
  const LawCase replay = case_from_json(false_law, report.counterexample_json);
  CHECK_FALSE(false_law.check(replay));
  // Locally minimal: one state, one dead pair, empty precondition.
  CHECK(replay.space.size() == 1);
  CHECK(replay.programs[0].post().count() == 1);
  CHECK(replay.programs[0].pre().is_empty());

  const LawReport sampled = check_law(
      false_law,
      {.space_size = 3, .mode = CheckMode::sampled, .samples = 500, .seed = 9});
  CHECK(sampled.status == LawStatus::fail);
  CHECK_FALSE(false_law.check(case_from_json(false_law, sampled.counterexample_json)));
}

TEST_CASE("suite runs are deterministic and filterable") {
  SuiteConfig config;
  config.only_group = LawGroup::rounding;
  config.samples = 200;
  config.expr_samples = 20;
  config.parallel = true;
  const SuiteResult once = run_suite(config);
  const SuiteResult twice = run_suite(config);
  REQUIRE(once.reports.size() == twice.reports.size());
  for (std::size_t i = 0; i < once.reports.size(); ++i) {
    CHECK(report_to_json(once.reports[i]) == report_to_json(twice.reports[i]));
    CHECK(once.reports[i].status == LawStatus::pass);
  }
  CHECK(once.audit_report == twice.audit_report);
  CHECK(once.asserted_ok);

  SuiteConfig single;
  single.only_law = "Compose_assoc";
  single.sampled_spaces.clear();
  const SuiteResult law_only = run_suite(single);
  REQUIRE(law_only.reports.size() == 1);
  CHECK(law_only.reports[0].id == "Compose_assoc");
  CHECK(law_only.reports[0].universe.cases ==
        check_law("Compose_assoc", {.space_size = 2}).universe.cases);

  SuiteConfig unknown;
  unknown.only_law = "Nope";
  CHECK_THROWS_AS((void)run_suite(unknown), usage_error);
}
