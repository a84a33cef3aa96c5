// prism -- command-line front end for the program-algebra library.
//
// Exit codes: 0 = success / property holds; 1 = property does not hold
// (a machine-readable witness is printed on stdout); 2 = usage, parse or
// semantic error; 3 = an asserted law was violated.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "prism/contracts.hpp"
#include "prism/dsl/parser.hpp"
#include "prism/dsl/printer.hpp"
#include "prism/json_io.hpp"
#include "prism/laws/checker.hpp"
#include "prism/refinement.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitDoesNotHold = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLawViolation = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw prism::usage_error("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct LoadedFile {
  prism::Environment env;
  prism::Expr main;
};

LoadedFile load_with_main(const std::string& path) {
  const prism::ParseResult result = prism::parse_source(slurp(path));
  if (!result.ok()) {
    for (const auto& e : result.errors) std::cerr << path << ": " << e.what() << "\n";
    std::exit(kExitUsage);
  }
  if (!result.main) {
    std::cerr << path << ": file has no main expression\n";
    std::exit(kExitUsage);
  }
  return {result.env, *result.main};
}

int emit_holds(ordered_json witness, bool holds) {
  witness["holds"] = holds;
  std::cout << witness.dump() << "\n";
  return holds ? kExitHolds : kExitDoesNotHold;
}

int run_eval(const std::string& path, const std::string& out_mode) {
  const LoadedFile file = load_with_main(path);
  const prism::Program p = prism::denote(file.main, file.env);
  if (out_mode == "text")
    std::cout << prism::print(p) << "\n";
  else
    std::cout << prism::to_json(p) << "\n";
  return kExitHolds;
}

int run_check(const std::string& path, const std::string& prop) {
  const LoadedFile file = load_with_main(path);
  const prism::Program p = prism::denote(file.main, file.env);
  const prism::ProgramClassification c = prism::classify(p);
  bool holds = false;
  if (prop == "feasible") holds = c.feasible;
  else if (prop == "rounded") holds = c.rounded;
  else if (prop == "exact") holds = c.exact;
  else if (prop == "total") holds = c.total;
  else if (prop == "deterministic") holds = c.deterministic;
  ordered_json witness;
  witness["property"] = prop;
  witness["program"] = ordered_json::parse(prism::to_json(p));
  return emit_holds(std::move(witness), holds);
}

int run_compare(const std::string& left_path, const std::string& right_path,
                const std::string& rel) {
  const LoadedFile left = load_with_main(left_path);
  const LoadedFile right = load_with_main(right_path);
  const prism::Program a = prism::denote(left.main, left.env);
  const prism::Program b = prism::denote(right.main, right.env);
  bool holds = false;
  if (rel == "equal") holds = prism::equal(a, b);
  else if (rel == "equiv") holds = prism::equivalent(a, b);
  else if (rel == "refines") holds = prism::refines(a, b);
  else if (rel == "specializes") holds = prism::specializes(a, b);
  else if (rel == "implements") holds = prism::implements(a, b);
  ordered_json witness;
  witness["relation"] = rel;
  witness["left"] = ordered_json::parse(prism::to_json(a));
  witness["right"] = ordered_json::parse(prism::to_json(b));
  if (rel == "refines" || rel == "specializes" || rel == "implements") {
    const prism::RefinementParts parts = rel == "specializes"
                                             ? prism::refinement_parts(b, a)
                                             : prism::refinement_parts(a, b);
    ordered_json jp;
    jp["state_extends"] = parts.state_extends;
    jp["pre_weakens"] = parts.pre_weakens;
    jp["post_strengthens"] = parts.post_strengthens;
    witness["parts"] = std::move(jp);
  }
  return emit_holds(std::move(witness), holds);
}

int run_wp(const std::string& path, const std::string& rel_path) {
  const LoadedFile file = load_with_main(path);
  const prism::Program p = prism::denote(file.main, file.env);
  const prism::Relation r = prism::relation_from_json(slurp(rel_path));
  if (r.space() != p.space())
    throw prism::usage_error("the relation's space differs from the program's");
  std::cout << prism::to_json(prism::wp(p, r)) << "\n";
  return kExitHolds;
}

int run_sp(const std::string& path, const std::string& cond_name,
           const std::string& out_mode) {
  const LoadedFile file = load_with_main(path);
  const prism::Program p = prism::denote(file.main, file.env);
  const prism::Condition c = file.env.resolve_condition(cond_name);
  const prism::Relation result = prism::sp(p, c);
  std::cout << prism::to_json(result) << "\n";
  if (out_mode == "text") {
    // Derived output: the states the restricted relation can reach.
    std::cout << "reachable (range of sp, derived): "
              << prism::to_json(result.range()) << "\n";
  }
  return kExitHolds;
}

int run_cnf(const std::string& path, bool force, const std::string& out_mode) {
  const LoadedFile file = load_with_main(path);
  constexpr std::uint64_t kSumLimit = 100000;
  prism::Cnf cnf;
  try {
    cnf = prism::to_cnf_limited(file.main, file.env, force ? 0 : kSumLimit);
  } catch (const prism::usage_error& e) {
    std::cerr << path << ": " << e.what() << " (pass --force to expand anyway)\n";
    return kExitUsage;
  }
  if (out_mode == "json")
    std::cout << prism::cnf_to_json(cnf) << "\n";
  else
    std::cout << prism::print_cnf(cnf);
  return kExitHolds;
}

int run_invariant(const std::string& path, const std::string& cond_name, bool loop) {
  const LoadedFile file = load_with_main(path);
  const prism::Condition inv = file.env.resolve_condition(cond_name);
  ordered_json witness;
  witness["condition"] = ordered_json::parse(prism::to_json(inv));
  witness["loop"] = loop;
  if (!loop) {
    const prism::Program p = prism::denote(file.main, file.env);
    witness["program"] = ordered_json::parse(prism::to_json(p));
    return emit_holds(std::move(witness), prism::is_invariant(inv, p));
  }
  // Loop-invariant mode: main must be one of the loop forms.
  const prism::Expr& e = file.main;
  prism::Program init;
  prism::Condition exit_cond;
  prism::Program body;
  switch (e.kind()) {
    case prism::ExprKind::from_loop:
      init = prism::denote(e.child(0), file.env);
      exit_cond = e.guard();
      body = prism::denote(e.child(1), file.env);
      break;
    case prism::ExprKind::while_loop:
      init = prism::skip(file.env.space);
      exit_cond = ~e.guard();
      body = prism::denote(e.child(0), file.env);
      break;
    case prism::ExprKind::repeat_loop:
      init = prism::denote(e.child(0), file.env);
      exit_cond = e.guard();
      body = init;
      break;
    default:
      throw prism::usage_error(
          "--loop needs the main expression to be a from/while/repeat loop");
  }
  const bool holds = prism::is_loop_invariant(inv, init, exit_cond, body);
  witness["initialization"] = ordered_json::parse(prism::to_json(init));
  witness["exit_condition"] = ordered_json::parse(prism::to_json(exit_cond));
  witness["body"] = ordered_json::parse(prism::to_json(body));
  return emit_holds(std::move(witness), holds);
}

std::optional<prism::LawGroup> group_from_name(const std::string& name) {
  using G = prism::LawGroup;
  for (const G g : {G::relations, G::core, G::basic_programs, G::restriction,
                    G::corestriction, G::choice_ops, G::composition, G::rounding,
                    G::feasibility, G::refinement_group, G::conditionals, G::loops,
                    G::invariants, G::contracts_group, G::concurrency_group})
    if (name == prism::to_string(g)) return g;
  return std::nullopt;
}

int run_laws(const std::string& law, const std::string& group, std::size_t space_size,
             std::size_t samples, std::uint64_t seed, bool exhaustive_only,
             const std::string& report_path) {
  prism::SuiteConfig config;
  config.exhaustive_space = space_size;
  config.samples = samples;
  config.seed = seed;
  if (exhaustive_only) config.sampled_spaces.clear();
  if (!law.empty()) config.only_law = law;
  if (!group.empty()) {
    const auto g = group_from_name(group);
    if (!g) throw prism::usage_error("unknown law group '" + group + "'");
    config.only_group = g;
  }
  const prism::SuiteResult result = prism::run_suite(config);
  for (const auto& report : result.reports) {
    std::cout << prism::report_to_text(report) << "\n";
    if (report.failed()) std::cout << prism::report_to_json(report) << "\n";
  }
  std::cout << "\n" << result.audit_report;
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw prism::usage_error("cannot write report to '" + report_path + "'");
    for (const auto& report : result.reports)
      out << prism::report_to_json(report) << "\n";
    ordered_json audit;
    audit["audit_report"] = result.audit_report;
    out << audit.dump() << "\n";
  }
  std::cout << (result.asserted_ok ? "SUITE PASS\n" : "SUITE FAIL\n");
  return result.asserted_ok ? kExitHolds : kExitLawViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "prism -- programs as <postcondition, precondition> over finite state spaces"};
  app.require_subcommand(1);

  std::string file, out_mode = "json", prop, rel, left, right, rel_path, cond_name;
  bool force = false, loop = false;

  auto* eval = app.add_subcommand("eval", "evaluate a file's main expression");
  eval->add_option("file", file)->required();
  eval->add_option("--out", out_mode)->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check", "classify the main expression");
  check->add_option("file", file)->required();
  check->add_option("--prop", prop)
      ->required()
      ->check(CLI::IsMember({"feasible", "rounded", "exact", "total", "deterministic"}));

  auto* compare = app.add_subcommand("compare", "compare two programs");
  compare->add_option("left", left)->required();
  compare->add_option("right", right)->required();
  compare->add_option("--rel", rel)
      ->required()
      ->check(CLI::IsMember({"equal", "equiv", "refines", "specializes", "implements"}));

  auto* wp_cmd = app.add_subcommand("wp", "weakest precondition for a target relation");
  wp_cmd->add_option("file", file)->required();
  wp_cmd->add_option("--rel", rel_path, "relation JSON file")->required();

  auto* sp_cmd =
      app.add_subcommand("sp", "strongest postcondition for a start condition");
  sp_cmd->add_option("file", file)->required();
  sp_cmd->add_option("--pre", cond_name, "declared condition name")->required();
  sp_cmd->add_option("--out", out_mode)->check(CLI::IsMember({"json", "text"}));

  auto* cnf_cmd = app.add_subcommand("cnf", "choice normal form of the main expression");
  cnf_cmd->add_option("file", file)->required();
  cnf_cmd->add_flag("--force", force, "expand past the 100000-sum limit");
  cnf_cmd->add_option("--out", out_mode)->check(CLI::IsMember({"json", "text"}));

  auto* inv_cmd = app.add_subcommand("invariant", "invariant / loop-invariant check");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_option("--cond", cond_name, "declared condition name")->required();
  inv_cmd->add_flag("--loop", loop, "check as a loop invariant");

  std::string law_id, group_name, report_path;
  std::size_t space_size = 2, samples = 10000;
  std::uint64_t seed = 1;
  bool exhaustive_only = false;
  auto* laws_cmd = app.add_subcommand("laws", "run the law-verification suite");
  laws_cmd->add_option("--law", law_id, "check one law id");
  laws_cmd->add_option("--group", group_name, "check one law group");
  laws_cmd->add_option("--space-size", space_size, "exhaustive space size");
  laws_cmd->add_option("--samples", samples, "random cases per sampled universe");
  laws_cmd->add_option("--seed", seed, "seed for the sampled universes");
  laws_cmd->add_flag("--exhaustive", exhaustive_only, "skip the sampled universes");
  laws_cmd->add_option("--report", report_path, "write a JSON-lines report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(file, out_mode);
    if (check->parsed()) return run_check(file, prop);
    if (compare->parsed()) return run_compare(left, right, rel);
    if (wp_cmd->parsed()) return run_wp(file, rel_path);
    if (sp_cmd->parsed()) return run_sp(file, cond_name, out_mode);
    if (cnf_cmd->parsed()) return run_cnf(file, force, out_mode);
    if (inv_cmd->parsed()) return run_invariant(file, cond_name, loop);
    if (laws_cmd->parsed())
      return run_laws(law_id, group_name, space_size, samples, seed, exhaustive_only,
                      report_path);
  } catch (const prism::parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const prism::usage_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
