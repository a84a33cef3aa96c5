#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prism/dsl/parser.hpp"
#include "prism/dsl/printer.hpp"
#include "prism/laws/generators.hpp"

using namespace prism;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Renders an environment back to source, so a printed expression can be
// re-parsed in an equivalent context.
std::string env_source(const Environment& env) {
  std::ostringstream out;
  out << "space {";
  for (std::size_t i = 0; i < env.space.size(); ++i)
    out << (i ? ", " : "") << env.space.name(i);
  out << "}\n";
  for (const auto& [name, c] : env.conditions) {
    out << "cond " << name << " = {";
    bool first = true;
    for (const auto& s : c.names()) {
      out << (first ? "" : ", ") << s;
      first = false;
    }
    out << "}\n";
  }
  for (const auto& [name, p] : env.programs)
    out << "prog " << name << " = " << print(p) << "\n";
  return out.str();
}

Expr reparse(const Environment& env, const Expr& e) {
  const std::string source = env_source(env) + "main = " + print(e) + "\n";
  const ParseResult result = parse_source_or_throw(source);
  REQUIRE(result.main.has_value());
  return *result.main;
}

}  // namespace

TEST_CASE("precedence: ';' binds tighter than '[]'") {
  const ParseResult r = parse_source_or_throw(slurp(
      std::filesystem::path(PRISM_FIXTURE_DIR) / "03_precedence.prism"));
  REQUIRE(r.main.has_value());
  const Expr& e = *r.main;
  REQUIRE(e.kind() == ExprKind::choice);
  CHECK(e.child(0).kind() == ExprKind::basic_ref);
  CHECK(e.child(0).name() == "p");
  REQUIRE(e.child(1).kind() == ExprKind::seq);
  CHECK(e.child(1).child(0).name() == "q");
  CHECK(e.child(1).child(1).name() == "r");
}

TEST_CASE("if-then-else desugars to a two-branch conditional") {
  const ParseResult r = parse_source_or_throw(
      "space {0, 1}\ncond zero = {0}\nmain = if zero then havoc else skip end\n");
  REQUIRE(r.main.has_value());
  REQUIRE(r.main->kind() == ExprKind::conditional);
  const auto& branches = r.main->branches();
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].guard == Condition::of(r.env.space, {"0"}));
  CHECK(branches[1].guard == Condition::of(r.env.space, {"1"}));
  CHECK(branches[0].body.name() == "havoc");
  CHECK(branches[1].body.name() == "skip");
}

TEST_CASE("loop forms parse to the loop nodes") {
  const ParseResult r = parse_source_or_throw(slurp(
      std::filesystem::path(PRISM_FIXTURE_DIR) / "09_from_loop.prism"));
  REQUIRE(r.main.has_value());
  REQUIRE(r.main->kind() == ExprKind::from_loop);
  CHECK(r.main->guard() == Condition::of(r.env.space, {"0"}));
  CHECK(r.main->child(0).name() == "init");
  CHECK(r.main->child(1).name() == "dec");

  const ParseResult w = parse_source_or_throw(
      "space {0, 1}\ncond c = {1}\nmain = while c loop skip end\n");
  CHECK(w.main->kind() == ExprKind::while_loop);
  const ParseResult rep = parse_source_or_throw(
      "space {0, 1}\ncond c = {1}\nmain = repeat skip until c\n");
  CHECK(rep.main->kind() == ExprKind::repeat_loop);
  const ParseResult arb =
      parse_source_or_throw("space {0, 1}\nmain = loop skip end\n");
  CHECK(arb.main->kind() == ExprKind::arbitrary_rep);
}

TEST_CASE("restriction is tentative: names can be conditions or programs") {
  const ParseResult r = parse_source_or_throw(
      "space {0, 1}\ncond c = {0}\nprog c2 = skip\nmain = c: c2\n");
  REQUIRE(r.main->kind() == ExprKind::restrict);
  CHECK(r.main->child(0).name() == "c2");
  // A program name before ':' is a semantic error, not a silent fallback.
  const ParseResult bad = parse_source(
      "space {0, 1}\nprog p = skip\nprog q = skip\nmain = p: q\n");
  CHECK_FALSE(bad.ok());
}

TEST_CASE("all good fixtures parse and round-trip") {
  std::size_t count = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(PRISM_FIXTURE_DIR)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".prism") continue;
    CAPTURE(entry.path().filename().string());
    const ParseResult r = parse_source(slurp(entry.path()));
    for (const auto& e : r.errors) CAPTURE(e.what());
    CHECK(r.ok());
    ++count;
    if (r.main) {
      const Expr again = reparse(r.env, *r.main);
      CHECK(again == *r.main);
      // And printing is a fixed point of parse-then-print.
      CHECK(print(again) == print(*r.main));
    }
  }
  CHECK(count >= 20);
}

TEST_CASE("random expressions round-trip through the printer") {
  std::mt19937_64 rng(2024);
  const StateSpace three({"a", "b", "c"});
  for (int i = 0; i < 300; ++i) {
    const Environment env = gen_environment(rng, three, 3);
    const Expr e = gen_expr(rng, env, {.max_depth = 4, .max_atoms = 6,
                                       .core_only = false});
    CAPTURE(print(e));
    CHECK(reparse(env, e) == e);
  }
}

TEST_CASE("loop and conditional expressions round-trip") {
  const StateSpace s({"0", "1"});
  Environment env;
  env.space = s;
  env.programs.emplace("b", skip(s));
  const Condition c = Condition::of(s, {"0"});
  const Expr b = exprs::basic_ref("b");
  const std::vector<Expr> samples = {
      exprs::from_loop(b, c, b),
      exprs::while_loop(c, b),
      exprs::repeat_loop(b, c),
      exprs::seq(exprs::repeat_loop(b, c), b),
      exprs::power(exprs::restrict(c, b), 2),
      exprs::corestrict(exprs::choice(b, b), c),
      exprs::conditional({{c, b}, {~c, exprs::basic_ref("skip")}}, s),
      exprs::atomic_conc(b, exprs::conc(b, b)),
      exprs::demonic_choice(b, exprs::choice(b, b)),
      exprs::restrict(c, exprs::seq(b, b)),
  };
  for (const auto& e : samples) {
    CAPTURE(print(e));
    CHECK(reparse(env, e) == e);
  }
}

TEST_CASE("programs print as keywords or literals") {
  const StateSpace s({"0", "1"});
  CHECK(print(fail(s)) == "fail");
  CHECK(print(skip(s)) == "skip");
  CHECK(print(havoc(s)) == "havoc");
  CHECK(print(infeasible(s)) == "infeasible");
  const Program p =
      make_program(s, Condition::of(s, {"0"}), Relation::of(s, {{"0", "1"}}));
  CHECK(print(p) == "prog(pre: {0}, post: {0 -> 1})");
  // Both spellings parse back to the program itself.
  for (const Program& q : {fail(s), p}) {
    const ParseResult r = parse_source_or_throw("space {0, 1}\nmain = " + print(q) + "\n");
    CHECK(denote(*r.main, r.env) == q);
  }
}

TEST_CASE("errors carry positions") {
  const ParseResult missing = parse_source("space {1}\nmain = skip ; -- cut");
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.errors[0].line() == 2);
  CHECK(missing.errors[0].column() > 0);

  const ParseResult unknown = parse_source("space {1}\ncond c = {2}\nmain = skip\n");
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.errors[0].line() == 2);

  const ParseResult stray = parse_source("space {1}\nmain = skip ? fail\n");
  REQUIRE_FALSE(stray.ok());

  for (const auto& entry : std::filesystem::directory_iterator(
           std::filesystem::path(PRISM_FIXTURE_DIR) / "bad")) {
    CAPTURE(entry.path().filename().string());
    const ParseResult r = parse_source(slurp(entry.path()));
    CHECK_FALSE(r.ok());
    for (const auto& e : r.errors) {
      CHECK(e.line() > 0);
      CHECK(e.column() > 0);
    }
  }
}

TEST_CASE("recovery reports several independent errors") {
  const ParseResult r = parse_source(
      "space {1, 2}\n"
      "cond c = {9}\n"
      "prog p = skip\n"
      "cond d = nosuch\n"
      "main = p\n");
  CHECK(r.errors.size() == 2);
  CHECK(r.main.has_value());  // the good declarations survive
  CHECK(r.env.programs.count("p") == 1);
}

TEST_CASE("declarations are single-assignment and ordered") {
  CHECK_FALSE(parse_source("space {1}\ncond c = true\ncond c = false\nmain = skip\n")
                  .ok());
  CHECK_FALSE(parse_source("space {1}\nmain = skip\nprog p = skip\n").ok());
  // Use before declaration is an error.
  CHECK_FALSE(parse_source("space {1}\nprog p = q\nprog q = skip\n").ok());
}
