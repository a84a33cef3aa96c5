#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "prism/concurrency/cnf.hpp"
#include "prism/laws/generators.hpp"

using namespace prism;

namespace {

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

Environment basis_env(const StateSpace& space,
                      const std::vector<std::pair<std::string, Program>>& programs) {
  Environment env;
  env.space = space;
  for (const auto& [name, p] : programs) env.programs.emplace(name, p);
  return env;
}

std::vector<std::string> cnf_lines(const Cnf& c) {
  std::istringstream in(print_cnf(c));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("atomic concurrency") {
  const StateSpace s({"1", "2", "3"});
  const Program p = prog(s, {"1"}, {{"1", "2"}});
  const Program q = prog(s, {"2"}, {{"2", "3"}});
  CHECK(atomic_conc(p, q) == prog(s, {"1"}, {{"1", "3"}}));
  CHECK(atomic_conc(p, fail(s)) == fail(s));
  CHECK(atomic_conc(p, q) == atomic_conc(q, p));
}

TEST_CASE("denotation of expressions") {
  const StateSpace s({"1", "2"});
  const Program pv = prog(s, {"1"}, {{"1", "2"}});
  const Program qv = prog(s, {"1", "2"}, {{"1", "1"}, {"2", "1"}});
  const Environment env = basis_env(s, {{"p", pv}, {"q", qv}});
  const Condition c = Condition::of(s, {"1"});

  CHECK(equivalent(denote(exprs::seq(exprs::basic_ref("skip"), exprs::basic_ref("p")),
                          env),
                   pv));
  CHECK(equivalent(
      denote(exprs::choice(exprs::basic_ref("fail"), exprs::basic_ref("p")), env), pv));
  CHECK(denote(exprs::restrict(c, exprs::seq(exprs::basic_ref("p"),
                                             exprs::basic_ref("q"))),
               env) ==
        denote(exprs::seq(exprs::restrict(c, exprs::basic_ref("p")),
                          exprs::basic_ref("q")),
               env));
  CHECK_THROWS_AS((void)denote(exprs::basic_ref("nosuch"), env), usage_error);
}

TEST_CASE("normal form structure") {
  const StateSpace s({"1", "2"});
  const Program dummy = skip(s);
  const Environment env = basis_env(
      s, {{"u", dummy}, {"v", dummy}, {"x", dummy}, {"p", dummy}, {"q", dummy},
          {"r", dummy}});

  const Cnf choice_form =
      to_cnf(exprs::choice(exprs::basic_ref("u"), exprs::basic_ref("v")), env);
  REQUIRE(choice_form.sums.size() == 2);
  CHECK(choice_form.sums[0].size() == 1);
  CHECK(choice_form.sums[0][0].ref() == "u");
  CHECK(choice_form.sums[1][0].ref() == "v");

  const Cnf seq_form = to_cnf(
      exprs::seq(exprs::choice(exprs::basic_ref("u"), exprs::basic_ref("v")),
                 exprs::basic_ref("x")),
      env);
  REQUIRE(seq_form.sums.size() == 2);
  CHECK(print_cnf(seq_form) == "u ; x\nv ; x\n");

  // Guard pushing: the restriction lands on the first atom of every sum.
  const Condition c = Condition::of(s, {"1"});
  const Cnf guarded = to_cnf(
      exprs::restrict(c, exprs::choice(exprs::basic_ref("p"),
                                       exprs::seq(exprs::basic_ref("q"),
                                                  exprs::basic_ref("r")))),
      env);
  REQUIRE(guarded.sums.size() == 2);
  CHECK(guarded.sums[0][0].guard == c);
  CHECK(guarded.sums[0][0].ref() == "p");
  CHECK(guarded.sums[1][0].guard == c);
  CHECK(guarded.sums[1][0].ref() == "q");
  CHECK_FALSE(guarded.sums[1][1].guard.has_value());
  CHECK(print_cnf(guarded) == "{1}: p\n{1}: q ; r\n");

  // Nested guards intersect.
  const Cnf nested = to_cnf(
      exprs::restrict(c, exprs::restrict(~c, exprs::basic_ref("p"))), env);
  REQUIRE(nested.sums.size() == 1);
  CHECK(nested.sums[0][0].guard == (c & ~c));
}

TEST_CASE("interleaving expansion of choice against sequence") {
  const StateSpace s({"1"});
  const Program dummy = skip(s);
  const Environment env = basis_env(
      s, {{"u", dummy}, {"v", dummy}, {"x", dummy}, {"y", dummy}});
  const Cnf merged = conc(exprs::choice(exprs::basic_ref("u"), exprs::basic_ref("v")),
                          exprs::seq(exprs::basic_ref("x"), exprs::basic_ref("y")),
                          env);
  CHECK(merged.sums.size() == 6);
  CHECK(print_cnf(merged) ==
        "u ; x ; y\n"
        "v ; x ; y\n"
        "x ; u ; y\n"
        "x ; v ; y\n"
        "x ; y ; u\n"
        "x ; y ; v\n");
}

TEST_CASE("two coffees in parallel") {
  const StateSpace s({"1"});
  const Program dummy = skip(s);
  Environment env;
  env.space = s;
  for (const auto name : {"put_l", "push_l", "get_l", "put_r", "push_r", "get_r"})
    env.programs.emplace(name, dummy);
  const auto seq3 = [](const char* a, const char* b, const char* c) {
    return exprs::seq(exprs::seq(exprs::basic_ref(a), exprs::basic_ref(b)),
                      exprs::basic_ref(c));
  };
  const Cnf merged = conc(seq3("put_l", "push_l", "get_l"),
                          seq3("put_r", "push_r", "get_r"), env);
  CHECK(merged.sums.size() == 20);
  const auto lines = cnf_lines(merged);
  CHECK(std::find(lines.begin(), lines.end(),
                  "put_r ; put_l ; push_l ; push_r ; get_r ; get_l") != lines.end());
}

TEST_CASE("occurs-before and interleaving queries") {
  const StateSpace s({"1"});
  const Environment env = basis_env(s, {{"u", skip(s)}, {"v", skip(s)},
                                        {"x", skip(s)}, {"y", skip(s)}});
  const Expr u = exprs::basic_ref("u");
  const Expr v = exprs::basic_ref("v");
  const Expr x = exprs::basic_ref("x");
  const Expr y = exprs::basic_ref("y");

  const Cnf seq_form = to_cnf(exprs::seq(u, v), env);
  CHECK(occurs_before(u.atom_id(), v.atom_id(), seq_form));
  CHECK_FALSE(occurs_before(v.atom_id(), u.atom_id(), seq_form));

  const Cnf merged = conc(exprs::seq(u, v), exprs::seq(x, y), env);
  CHECK(occurs_before(u.atom_id(), v.atom_id(), merged));
  CHECK_FALSE(occurs_before(v.atom_id(), u.atom_id(), merged));
  CHECK(interleaved(u.atom_id(), x.atom_id(), merged));
  CHECK(interleaved(v.atom_id(), y.atom_id(), merged));

  const Cnf single = to_cnf(u, env);
  CHECK_FALSE(interleaved(u.atom_id(), u.atom_id(), single));
  CHECK_THROWS_AS((void)occurs_before(u.atom_id(), 999999, single), usage_error);
}

TEST_CASE("empty sums and empty forms denote Fail") {
  const StateSpace s({"1", "2"});
  Environment env;
  env.space = s;
  CHECK(denote_cnf(Cnf{}, env) == fail(s));
  CHECK(denote_cnf(Cnf{{CnfSum{}}}, env) == fail(s));
}

TEST_CASE("cnf soundness on random civilized expressions") {
  std::mt19937_64 rng(99);
  const StateSpace three({"a", "b", "c"});
  for (int i = 0; i < 100; ++i) {
    const Environment env = gen_environment(rng, three, 3);
    const Expr e = gen_expr(rng, env, {.max_depth = 5, .max_atoms = 8,
                                       .core_only = false});
    CHECK(equivalent(denote_cnf(to_cnf(e, env), env), denote(e, env)));
  }
}

TEST_CASE("conc denotation agrees with the rule-by-rule expansion") {
  const StateSpace s({"1", "2"});
  const Program a = prog(s, {"1"}, {{"1", "2"}});
  const Program b = prog(s, {"2"}, {{"2", "1"}});
  const Environment env = basis_env(s, {{"a", a}, {"b", b}});
  const Expr left = exprs::choice(exprs::basic_ref("a"), exprs::basic_ref("b"));
  const Expr right = exprs::seq(exprs::basic_ref("a"), exprs::basic_ref("b"));
  CHECK(denote_cnf(conc(left, right, env), env) == conc_by_rule_order(left, right, env));
}

TEST_CASE("expansion size guard") {
  const StateSpace s({"1"});
  Environment env;
  env.space = s;
  Expr big = exprs::basic_ref("skip");
  for (int i = 0; i < 12; ++i)
    big = exprs::choice(big, exprs::basic_ref("skip"));  // 13 sums
  CHECK_THROWS_AS((void)to_cnf_limited(big, env, 10), usage_error);
  CHECK(to_cnf_limited(big, env, 100).sums.size() == 13);

  const Cnf l = to_cnf(big, env);
  CHECK(conc_sum_count(l, l) > 100);
}
