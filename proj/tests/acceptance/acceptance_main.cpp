// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Everything is exact discrete mathematics; there are no
// tolerances anywhere.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prism/concurrency/cnf.hpp"
#include "prism/dsl/parser.hpp"
#include "prism/dsl/printer.hpp"
#include "prism/json_io.hpp"
#include "prism/laws/checker.hpp"

using namespace prism;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << ": " << detail
            << "\n";
  if (!ok) ++g_failures;
}

Program prog(const StateSpace& s, const std::vector<std::string>& pre,
             const std::vector<std::pair<std::string, std::string>>& post) {
  return make_program(s, Condition::of(s, pre), Relation::of(s, post));
}

// --- criterion 1: the worked micro-examples, bit-exact -----------------

void criterion_worked_examples() {
  const auto start = std::chrono::steady_clock::now();
  const StateSpace two({"1", "2"});
  bool ok = true;
  std::string detail;

  {  // Choice must not resuscitate the dead pair [2,1].
    const Program p = prog(two, {"1"}, {{"1", "1"}, {"2", "1"}});
    const Program q = prog(two, {"2"}, {{"2", "2"}});
    const Program u = choice(p, q);
    ok = ok && u == prog(two, {"1", "2"}, {{"1", "1"}, {"2", "2"}});
    ok = ok && to_json(u) ==
                   R"({"space":["1","2"],"pre":["1","2"],"post":[["1","1"],["2","2"]]})";
  }
  {  // Composition must not bring [20,1000] back to life.
    const StateSpace s({"1", "10", "20", "1000"});
    const Program p = prog(s, {"1"}, {{"1", "10"}, {"1", "20"}});
    const Program q = prog(s, {"10"}, {{"10", "10"}, {"20", "1000"}});
    const Program c = compose(p, q);
    ok = ok && c == prog(s, {"1"}, {{"1", "10"}});
    ok = ok && to_json(c) ==
                   R"({"space":["1","10","1000","20"],"pre":["1"],"post":[["1","10"]]})";
  }
  {  // Idempotence witness: p U p equals Fail and round(p), equivalent but
     // not equal to p.
    const Program p = prog(two, {}, {{"1", "1"}});
    const Program pp = choice(p, p);
    ok = ok && pp == fail(two);
    ok = ok && pp == version(p, VersionMode::round);
    ok = ok && equivalent(pp, p) && !equal(pp, p);
  }
  {  // Left-distribution witness separates = from equiv.
    const Program w = prog(two, {"1"}, {{"1", "1"}, {"2", "1"}});
    const Program lhs = compose(w, choice(w, w));
    const Program rhs = choice(compose(w, w), compose(w, w));
    ok = ok && !equal(lhs, rhs) && equivalent(lhs, rhs);
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  detail = "worked micro-examples reproduce bit-exactly (" +
           std::to_string(elapsed.count()) + " ms)";
  report(1, ok, detail);
}

// --- criterion 2: the asserted law suite --------------------------------

SuiteResult run_full_suite() {
  SuiteConfig config;
  config.exhaustive_space = 2;
  config.sampled_spaces = {3, 4};
  config.samples = 10000;
  config.expr_samples = 1000;
  config.expr_space = 3;
  config.seed = 1;
  return run_suite(config);
}

void criterion_law_suite(const SuiteResult& suite) {
  std::size_t asserted = 0, failures = 0;
  std::uint64_t exhaustive_cases = 0, sampled_cases = 0;
  for (const auto& r : suite.reports) {
    if (r.law_class != LawClass::asserted) continue;
    ++asserted;
    if (r.failed()) ++failures;
    if (r.universe.exhaustive)
      exhaustive_cases += r.universe.cases;
    else
      sampled_cases += r.universe.cases;
  }
  std::ostringstream detail;
  detail << asserted << " asserted law universes (" << exhaustive_cases
         << " exhaustive cases at |S|=2, " << sampled_cases
         << " sampled cases at |S|=3,4 with mixed constraints), " << failures
         << " failures";
  report(2, failures == 0 && suite.asserted_ok, detail.str());
}

// --- criterion 3: concurrency expansion and soundness -------------------

void criterion_concurrency() {
  bool ok = true;
  std::string detail;
  {
    const StateSpace s({"1"});
    Environment env;
    env.space = s;
    for (const auto name : {"u", "v", "x", "y"}) env.programs.emplace(name, skip(s));
    const Cnf merged =
        conc(exprs::choice(exprs::basic_ref("u"), exprs::basic_ref("v")),
             exprs::seq(exprs::basic_ref("x"), exprs::basic_ref("y")), env);
    ok = ok && merged.sums.size() == 6;
    ok = ok && print_cnf(merged) ==
                   "u ; x ; y\nv ; x ; y\nx ; u ; y\nx ; v ; y\nx ; y ; u\nx ; y ; v\n";
  }
  {
    const StateSpace s({"1"});
    Environment env;
    env.space = s;
    for (const auto name : {"put_l", "push_l", "get_l", "put_r", "push_r", "get_r"})
      env.programs.emplace(name, skip(s));
    const auto seq3 = [](const char* a, const char* b, const char* c) {
      return exprs::seq(exprs::seq(exprs::basic_ref(a), exprs::basic_ref(b)),
                        exprs::basic_ref(c));
    };
    const Cnf merged = conc(seq3("put_l", "push_l", "get_l"),
                            seq3("put_r", "push_r", "get_r"), env);
    ok = ok && merged.sums.size() == 20;
    const std::string text = print_cnf(merged);
    ok = ok &&
         text.find("put_r ; put_l ; push_l ; push_r ; get_r ; get_l") !=
             std::string::npos;
  }
  CheckConfig config;
  config.space_size = 3;
  config.mode = CheckMode::sampled;
  config.samples = 1000;
  config.seed = 1;
  const LawReport sound = check_law("Conc_sound", config);
  ok = ok && sound.status == LawStatus::pass && sound.universe.cases == 1000;
  detail =
      "6-sum expansion and the machine trace reproduce; order preservation and "
      "full interleaving hold on 1000 random expression pairs";
  report(3, ok, detail);
}

// --- criterion 4: CNF soundness ------------------------------------------

void criterion_cnf_soundness() {
  bool ok = true;
  std::uint64_t total = 0;
  for (const std::size_t size : {2u, 3u}) {
    CheckConfig config;
    config.space_size = size;
    config.mode = CheckMode::sampled;
    config.samples = 1000;
    config.seed = 1;
    const LawReport r = check_law("Normal_form", config);
    ok = ok && r.status == LawStatus::pass;
    total += r.universe.cases;
  }
  report(4, ok,
         "denote(to_cnf(e)) equivalent to denote(e) on " + std::to_string(total) +
             " random expressions of depth <= 5 over |S| <= 3, zero failures");
}

// --- criterion 5: loop semantics against the brute-force oracle ----------

Program loop_union_oracle(const Condition& c, const Program& b) {
  const Program body = restrict(c, b);
  std::vector<Program> seen;
  Program pw = power(body, 0);
  Program acc = corestrict(pw, ~c);
  seen.push_back(pw);
  for (;;) {
    pw = compose(pw, body);
    bool repeated = false;
    for (const auto& old : seen) repeated = repeated || old == pw;
    if (repeated) return acc;
    seen.push_back(pw);
    acc = choice(acc, corestrict(pw, ~c));
  }
}

void criterion_loops() {
  bool ok = true;
  std::size_t cases = 0;
  std::mt19937_64 rng(5);
  for (std::size_t size = 2; size <= 4; ++size) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) names.push_back("s" + std::to_string(i));
    const StateSpace space{names};
    for (int i = 0; i < 334; ++i) {
      const Program a = gen_program(rng, space);
      const Program b = gen_program(rng, space);
      const Condition c = gen_condition(rng, space);
      ++cases;
      // while C loop b end against the direct power iteration.
      ok = ok && equivalent(while_loop(c, b), loop_union_oracle(c, b));
      // from/repeat are a composition away from the same union.
      const Program from_ref =
          compose(a, corestrict(arbitrary_rep(restrict(~c, b)), c));
      ok = ok && from_loop(a, c, b) == from_ref;
      ok = ok && repeat_loop(b, c) ==
                     compose(b, corestrict(arbitrary_rep(restrict(~c, b)), c));
      // A terminating loop establishes its exit condition.
      ok = ok && from_loop(a, c, b).post().range().subset_of(c);
      // The fundamental loop-invariant property, with the invariant built
      // to contain the initialization's results.
      const Program body = restrict(~c, b);
      Condition inv = a.post().range() | gen_condition(rng, space);
      for (;;) {
        const Condition next = inv | image(body.post(), inv & body.pre());
        if (next == inv) break;
        inv = next;
      }
      ok = ok && prog_range(from_loop(a, c, b)).subset_of(c & inv);
      if (!ok) break;
    }
  }
  report(5, ok,
         "while/from/repeat match the power-iteration oracle and "
         "range/invariant facts hold on " +
             std::to_string(cases) + " random (a, C, b) triples at |S| <= 4");
}

// --- criterion 6: the audit report ---------------------------------------

void criterion_audit_report(const SuiteResult& suite) {
  const std::string& audit = suite.audit_report;
  bool ok = !audit.empty();
  const auto requires_line = [&](const std::string& needle) {
    if (audit.find(needle) == std::string::npos) {
      ok = false;
      std::cout << "  missing audit line: " << needle << "\n";
    }
  };
  // (a) which ordering the exchange laws satisfy
  requires_line("Conc_composegeneral");
  requires_line("as specialization: HOLDS");
  // (b) Conc_assoc level
  requires_line("Conc_assoc");
  // (c) status of the contentious statements
  requires_line("Corestrict_false");
  requires_line("Refine_failonly");
  requires_line("Special_failonly");
  requires_line("Loop_invinv");
  requires_line("invariant of the initialization a: FAILS");
  // determinism: a second run produces the identical report
  const SuiteResult again = run_full_suite();
  ok = ok && again.audit_report == audit;
  ok = ok && again.reports.size() == suite.reports.size();
  for (std::size_t i = 0; ok && i < again.reports.size(); ++i)
    ok = report_to_json(again.reports[i]) == report_to_json(suite.reports[i]);
  report(6, ok, "audit report produced, complete and byte-identical across runs");
}

// --- criterion 7: the DSL fixture corpus ----------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

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

void criterion_dsl() {
  namespace fs = std::filesystem;
  bool ok = true;
  std::size_t good = 0, bad = 0;
  for (const auto& entry : fs::directory_iterator(PRISM_FIXTURE_DIR)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".prism") continue;
    const ParseResult r = parse_source(slurp(entry.path()));
    if (!r.ok()) {
      ok = false;
      std::cout << "  fixture failed to parse: " << entry.path() << "\n";
      continue;
    }
    ++good;
    if (r.main) {
      const std::string source = env_source(r.env) + "main = " + print(*r.main) + "\n";
      const ParseResult back = parse_source(source);
      if (!back.ok() || !back.main || !(*back.main == *r.main)) {
        ok = false;
        std::cout << "  round-trip failed: " << entry.path() << "\n";
      }
    }
  }
  for (const auto& entry :
       fs::directory_iterator(fs::path(PRISM_FIXTURE_DIR) / "bad")) {
    const ParseResult r = parse_source(slurp(entry.path()));
    ++bad;
    if (r.ok()) {
      ok = false;
      std::cout << "  bad fixture accepted: " << entry.path() << "\n";
    } else {
      for (const auto& e : r.errors)
        if (e.line() == 0 || e.column() == 0) ok = false;
    }
  }
  ok = ok && good >= 20 && bad >= 4;
  report(7, ok,
         std::to_string(good) + " fixtures parse and round-trip; " +
             std::to_string(bad) + " malformed files produce positioned errors");
}

// --- criterion 8: scope of the verification --------------------------------

void criterion_scope(bool previous_ok) {
  report(8, previous_ok,
         "mechanized proof is out of scope by design; the substitute is "
         "exhaustive finite-model checking at |S|=2 plus seeded randomized "
         "checking at |S|=3..4 (criteria 2-5), decisive for the quantified "
         "set-algebra statements at those sizes");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_worked_examples();
  const SuiteResult suite = run_full_suite();
  criterion_law_suite(suite);
  criterion_concurrency();
  criterion_cnf_soundness();
  criterion_loops();
  criterion_audit_report(suite);
  criterion_dsl();
  criterion_scope(g_failures == 0);
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << elapsed.count() << " s)\n";
  return g_failures == 0 ? 0 : 1;
}
