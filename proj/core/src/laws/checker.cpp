#include "prism/laws/checker.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "prism/concurrency/cnf.hpp"
#include "prism/contracts.hpp"
#include "prism/dsl/printer.hpp"
#include "prism/error.hpp"
#include "prism/json_io.hpp"
#include "prism/refinement.hpp"

namespace prism {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

StateSpace make_space(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return StateSpace(std::move(names));
}

// ---- cross-space rebuilding (used by the shrinker) ----

Condition map_cond(const Condition& c, const StateSpace& to) {
  std::vector<std::string> members;
  for (const auto& n : c.names())
    if (to.index_of(n)) members.push_back(n);
  return Condition::of(to, members);
}

Relation map_rel(const Relation& r, const StateSpace& to) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& pr : r.pairs())
    if (to.index_of(pr.first) && to.index_of(pr.second)) pairs.push_back(pr);
  return Relation::of(to, pairs);
}

Program map_prog(const Program& p, const StateSpace& to) {
  return make_program(to, map_cond(p.pre(), to), map_rel(p.post(), to));
}

Expr map_expr(const Expr& e, const StateSpace& to) {
  switch (e.kind()) {
    case ExprKind::basic_ref:
      return e;
    case ExprKind::literal:
      return exprs::literal(map_prog(e.literal(), to));
    case ExprKind::choice:
      return exprs::choice(map_expr(e.child(0), to), map_expr(e.child(1), to));
    case ExprKind::demonic_choice:
      return exprs::demonic_choice(map_expr(e.child(0), to), map_expr(e.child(1), to));
    case ExprKind::seq:
      return exprs::seq(map_expr(e.child(0), to), map_expr(e.child(1), to));
    case ExprKind::restrict:
      return exprs::restrict(map_cond(e.guard(), to), map_expr(e.child(0), to));
    case ExprKind::corestrict:
      return exprs::corestrict(map_expr(e.child(0), to), map_cond(e.guard(), to));
    case ExprKind::conditional: {
      std::vector<ExprBranch> branches;
      for (const auto& br : e.branches())
        branches.push_back({map_cond(br.guard, to), map_expr(br.body, to)});
      return exprs::conditional(std::move(branches), to);
    }
    case ExprKind::from_loop:
      return exprs::from_loop(map_expr(e.child(0), to), map_cond(e.guard(), to),
                              map_expr(e.child(1), to));
    case ExprKind::while_loop:
      return exprs::while_loop(map_cond(e.guard(), to), map_expr(e.child(0), to));
    case ExprKind::repeat_loop:
      return exprs::repeat_loop(map_expr(e.child(0), to), map_cond(e.guard(), to));
    case ExprKind::power:
      return exprs::power(map_expr(e.child(0), to), e.exponent());
    case ExprKind::arbitrary_rep:
      return exprs::arbitrary_rep(map_expr(e.child(0), to));
    case ExprKind::conc:
      return exprs::conc(map_expr(e.child(0), to), map_expr(e.child(1), to));
    case ExprKind::atomic_conc:
      return exprs::atomic_conc(map_expr(e.child(0), to), map_expr(e.child(1), to));
  }
  throw usage_error("malformed expression node");
}

LawCase map_case(const LawCase& c, const StateSpace& to) {
  LawCase out;
  out.space = to;
  for (const auto& p : c.programs) out.programs.push_back(map_prog(p, to));
  for (const auto& cd : c.conditions) out.conditions.push_back(map_cond(cd, to));
  for (const auto& r : c.relations) out.relations.push_back(map_rel(r, to));
  out.nats = c.nats;
  if (c.env) {
    auto env = std::make_shared<Environment>();
    env->space = to;
    for (const auto& [name, cond] : c.env->conditions)
      env->conditions.emplace(name, map_cond(cond, to));
    for (const auto& [name, prog] : c.env->programs)
      env->programs.emplace(name, map_prog(prog, to));
    out.env = std::move(env);
  }
  for (const auto& e : c.exprs) out.exprs.push_back(map_expr(e, to));
  return out;
}

}  // namespace

namespace {
LawCase shrink_case(LawCase current, const std::function<bool(const LawCase&)>& fails);
}  // namespace

LawCase shrink_to_minimal(LawCase seed, const std::function<bool(const LawCase&)>& fails) {
  return shrink_case(std::move(seed), fails);
}

bool check_case(const LawSpec& law, const LawCase& c) {
  if (law.side_condition && !law.side_condition(c)) return true;
  if (law.law_class == LawClass::asserted) return law.check(c);
  const std::uint32_t all = (1u << law.facets.size()) - 1;
  return law.audit_check(c) == all;
}

std::string case_to_json(const LawCase& c) {
  ordered_json operands = ordered_json::array();
  const auto push = [&operands](const char* kind, ordered_json value) {
    ordered_json op;
    op["kind"] = kind;
    op["value"] = std::move(value);
    operands.push_back(std::move(op));
  };
  for (const auto& p : c.programs) push("program", ordered_json::parse(to_json(p)));
  for (const auto& cd : c.conditions) push("condition", ordered_json::parse(to_json(cd)));
  for (const auto& r : c.relations) push("relation", ordered_json::parse(to_json(r)));
  for (const auto& n : c.nats) push("nat", n);
  for (const auto& e : c.exprs) push("expr", print(e));
  ordered_json out;
  out["operands"] = std::move(operands);
  if (c.env) {
    ordered_json decls;
    for (const auto& [name, prog] : c.env->programs)
      decls[name] = ordered_json::parse(to_json(prog));
    out["environment"] = std::move(decls);
  }
  return out.dump();
}

LawCase case_from_json(const LawSpec& law, const std::string& json) {
  const ordered_json j = ordered_json::parse(json);
  LawCase c;
  for (const auto& op : j.at("operands")) {
    const std::string kind = op.at("kind").get<std::string>();
    const ordered_json& value = op.at("value");
    if (kind == "program")
      c.programs.push_back(program_from_json(value.dump()));
    else if (kind == "condition")
      c.conditions.push_back(condition_from_json(value.dump()));
    else if (kind == "relation")
      c.relations.push_back(relation_from_json(value.dump()));
    else if (kind == "nat")
      c.nats.push_back(value.get<std::size_t>());
    else
      throw usage_error("cannot rebuild operand of kind '" + kind + "' from JSON");
  }
  if (!c.programs.empty())
    c.space = c.programs.front().space();
  else if (!c.conditions.empty())
    c.space = c.conditions.front().space();
  else if (!c.relations.empty())
    c.space = c.relations.front().space();
  (void)law;
  return c;
}

namespace {

// ---- shrinking ----

LawCase shrink_case(LawCase current, const std::function<bool(const LawCase&)>& fails) {
  bool improved = true;
  const auto try_adopt = [&](const LawCase& candidate) {
    if (!fails(candidate)) return false;
    current = candidate;
    improved = true;
    return true;
  };
  while (improved) {
    improved = false;
    // Drop a state altogether.
    for (std::size_t i = 0; i < current.space.size(); ++i) {
      std::vector<std::string> names = current.space.names();
      names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
      LawCase candidate = map_case(current, StateSpace(std::move(names)));
      if (try_adopt(candidate)) break;
    }
    if (improved) continue;
    // Drop single precondition states / postcondition pairs.
    for (std::size_t pi = 0; pi < current.programs.size() && !improved; ++pi) {
      const Program& p = current.programs[pi];
      for (const auto& name : p.pre().names()) {
        LawCase candidate = current;
        Bitset bits = p.pre().bits();
        bits.reset(*current.space.index_of(name));
        candidate.programs[pi] = make_program(
            current.space, Condition::from_bits(current.space, std::move(bits)), p.post());
        if (try_adopt(candidate)) break;
      }
      if (improved) break;
      const std::size_t n = current.space.size();
      for (const auto& pr : p.post().pairs()) {
        LawCase candidate = current;
        Bitset bits = p.post().bits();
        bits.reset(*current.space.index_of(pr.first) * n +
                   *current.space.index_of(pr.second));
        candidate.programs[pi] = make_program(
            current.space, p.pre(), Relation::from_bits(current.space, std::move(bits)));
        if (try_adopt(candidate)) break;
      }
    }
    if (improved) continue;
    for (std::size_t ci = 0; ci < current.conditions.size() && !improved; ++ci) {
      for (const auto& name : current.conditions[ci].names()) {
        LawCase candidate = current;
        Bitset bits = current.conditions[ci].bits();
        bits.reset(*current.space.index_of(name));
        candidate.conditions[ci] = Condition::from_bits(current.space, std::move(bits));
        if (try_adopt(candidate)) break;
      }
    }
    if (improved) continue;
    for (std::size_t ri = 0; ri < current.relations.size() && !improved; ++ri) {
      const std::size_t n = current.space.size();
      for (const auto& pr : current.relations[ri].pairs()) {
        LawCase candidate = current;
        Bitset bits = current.relations[ri].bits();
        bits.reset(*current.space.index_of(pr.first) * n +
                   *current.space.index_of(pr.second));
        candidate.relations[ri] = Relation::from_bits(current.space, std::move(bits));
        if (try_adopt(candidate)) break;
      }
    }
    if (improved) continue;
    for (std::size_t ni = 0; ni < current.nats.size() && !improved; ++ni) {
      if (current.nats[ni] == 0) continue;
      LawCase candidate = current;
      candidate.nats[ni] -= 1;
      try_adopt(candidate);
    }
    if (improved) continue;
    // Structural shrink for expressions: replace a node by one child.
    for (std::size_t ei = 0; ei < current.exprs.size() && !improved; ++ei) {
      const Expr& e = current.exprs[ei];
      for (std::size_t k = 0; k < e.child_count(); ++k) {
        LawCase candidate = current;
        candidate.exprs[ei] = e.child(k);
        if (try_adopt(candidate)) break;
      }
    }
  }
  return current;
}

// ---- universe drivers ----

struct RunOutcome {
  UniverseDesc universe;
  bool failed = false;
  LawCase counterexample;
  // audit: per-facet violation counts and first violating case
  std::vector<std::uint64_t> facet_failures;
  std::vector<std::optional<LawCase>> facet_cases;
};

void account_audit(const LawSpec& law, const LawCase& c, RunOutcome& out) {
  const std::uint32_t held = law.audit_check(c);
  for (std::size_t f = 0; f < law.facets.size(); ++f) {
    if (held & (1u << f)) continue;
    if (out.facet_failures[f] == 0) out.facet_cases[f] = c;
    ++out.facet_failures[f];
  }
}

// Returns false to stop the run early (asserted counterexample found).
bool consume_case(const LawSpec& law, const LawCase& c, RunOutcome& out) {
  ++out.universe.cases;
  if (law.law_class == LawClass::asserted) {
    if (law.check(c)) return true;
    out.failed = true;
    out.counterexample = c;
    return false;
  }
  account_audit(law, c, out);
  return true;
}

RunOutcome run_exhaustive(const LawSpec& law, const StateSpace& space) {
  RunOutcome out;
  out.universe.space_size = space.size();
  out.universe.exhaustive = true;
  out.facet_failures.assign(law.facets.size(), 0);
  out.facet_cases.assign(law.facets.size(), std::nullopt);

  std::vector<Program> programs;
  std::vector<Condition> conditions;
  std::vector<Relation> relations;
  std::vector<std::size_t> pool_sizes;
  for (const auto kind : law.signature) {
    switch (kind) {
      case OperandKind::program:
        if (programs.empty()) programs = enumerate_programs(space);
        pool_sizes.push_back(programs.size());
        break;
      case OperandKind::condition:
        if (conditions.empty()) conditions = enumerate_conditions(space);
        pool_sizes.push_back(conditions.size());
        break;
      case OperandKind::relation:
        if (relations.empty()) relations = enumerate_relations(space);
        pool_sizes.push_back(relations.size());
        break;
      case OperandKind::nat:
        pool_sizes.push_back(law.max_nat + 1);
        break;
      case OperandKind::expr:
        throw usage_error("expression laws have no exhaustive universe");
    }
  }

  std::vector<std::size_t> idx(pool_sizes.size(), 0);
  for (;;) {
    LawCase c;
    c.space = space;
    for (std::size_t slot = 0; slot < law.signature.size(); ++slot) {
      switch (law.signature[slot]) {
        case OperandKind::program: c.programs.push_back(programs[idx[slot]]); break;
        case OperandKind::condition: c.conditions.push_back(conditions[idx[slot]]); break;
        case OperandKind::relation: c.relations.push_back(relations[idx[slot]]); break;
        case OperandKind::nat: c.nats.push_back(idx[slot]); break;
        case OperandKind::expr: break;
      }
    }
    if (law.side_condition && !law.side_condition(c)) {
      ++out.universe.filtered;
    } else if (!consume_case(law, c, out)) {
      return out;
    }
    // Odometer.
    std::size_t slot = 0;
    for (; slot < idx.size(); ++slot) {
      if (++idx[slot] < pool_sizes[slot]) break;
      idx[slot] = 0;
    }
    if (slot == idx.size()) break;
    if (idx.empty()) break;
  }
  return out;
}

GenConstraints mixed_constraints(std::mt19937_64& rng) {
  GenConstraints c;
  switch (rng() % 8) {
    case 0: case 1: c.feasible = true; break;
    case 2: case 3: c.rounded = true; break;
    case 4: c.feasible = true; c.rounded = true; break;
    case 5: c.pre_nonempty = true; break;
    default: break;
  }
  return c;
}

RunOutcome run_sampled(const LawSpec& law, const StateSpace& space, std::size_t samples,
                       std::uint64_t seed) {
  RunOutcome out;
  out.universe.space_size = space.size();
  out.universe.exhaustive = false;
  out.universe.seed = seed;
  out.facet_failures.assign(law.facets.size(), 0);
  out.facet_cases.assign(law.facets.size(), std::nullopt);

  std::mt19937_64 rng(seed ^ fnv1a(law.id) ^ (space.size() * 0x9e3779b97f4a7c15ull));
  for (std::size_t k = 0; k < samples; ++k) {
    LawCase c;
    c.space = space;
    if (law.has_exprs()) {
      auto fresh = std::make_shared<Environment>(gen_environment(rng, space, 3));
      c.env = fresh;
    }
    std::size_t prog_slot = 0;
    for (const auto kind : law.signature) {
      switch (kind) {
        case OperandKind::program: {
          const GenConstraints constraints =
              prog_slot < law.program_constraints.size()
                  ? law.program_constraints[prog_slot]
                  : mixed_constraints(rng);
          c.programs.push_back(gen_program(rng, space, constraints));
          ++prog_slot;
          break;
        }
        case OperandKind::condition:
          c.conditions.push_back(gen_condition(rng, space));
          break;
        case OperandKind::relation:
          c.relations.push_back(gen_relation(rng, space));
          break;
        case OperandKind::nat:
          c.nats.push_back(rng() % (law.max_nat + 1));
          break;
        case OperandKind::expr:
          c.exprs.push_back(gen_expr(rng, *c.env, law.expr_options));
          break;
      }
    }
    if (law.targeted) law.targeted(c, rng);
    if (law.side_condition && !law.side_condition(c)) {
      ++out.universe.filtered;
      continue;
    }
    if (!consume_case(law, c, out)) return out;
  }
  return out;
}

std::string facet_note(const LawSpec& law, const RunOutcome& out) {
  std::string note;
  for (std::size_t f = 0; f < law.facets.size(); ++f) {
    if (!note.empty()) note += "; ";
    note += law.facets[f];
    if (out.facet_failures[f] == 0) {
      note += ": holds";
    } else {
      note += ": fails (" + std::to_string(out.facet_failures[f]) + " cases)";
    }
  }
  return note;
}

LawReport outcome_to_report(const LawSpec& law, RunOutcome&& out) {
  LawReport report;
  report.id = law.id;
  report.group = law.group;
  report.law_class = law.law_class;
  report.universe = out.universe;
  if (law.law_class == LawClass::asserted) {
    if (out.failed) {
      report.status = LawStatus::fail;
      const LawCase shrunk = shrink_case(out.counterexample, [&law](const LawCase& c) {
        return (!law.side_condition || law.side_condition(c)) && !law.check(c);
      });
      report.counterexample_json = case_to_json(shrunk);
    } else {
      report.status = LawStatus::pass;
    }
    return report;
  }
  report.status = LawStatus::audit_note;
  report.note = facet_note(law, out);
  for (std::size_t f = 0; f < law.facets.size(); ++f) {
    FacetOutcome facet;
    facet.facet = law.facets[f];
    facet.failures = out.facet_failures[f];
    if (out.facet_cases[f]) {
      const std::uint32_t bit = 1u << f;
      const LawCase shrunk =
          shrink_case(*out.facet_cases[f], [&law, bit](const LawCase& c) {
            return (!law.side_condition || law.side_condition(c)) &&
                   (law.audit_check(c) & bit) == 0;
          });
      facet.counterexample_json = case_to_json(shrunk);
      if (report.counterexample_json.empty())
        report.counterexample_json = facet.counterexample_json;
    }
    report.facets.push_back(std::move(facet));
  }
  return report;
}

}  // namespace

LawReport check_law(const LawSpec& law, const CheckConfig& config) {
  const StateSpace space = make_space(config.space_size);
  RunOutcome out;
  if (law.has_exprs() || config.mode == CheckMode::sampled)
    out = run_sampled(law, space, config.samples, config.seed);
  else
    out = run_exhaustive(law, space);
  return outcome_to_report(law, std::move(out));
}

LawReport check_law(const std::string& id, const CheckConfig& config) {
  const LawSpec* law = find_law(id);
  if (!law) throw usage_error("unknown law id '" + id + "'");
  return check_law(*law, config);
}

namespace {

// ---- suite-level audit extras ----

struct StatementAudit {
  std::string law;
  std::string statement;
  std::string finding;
  bool verified;
};

std::vector<StatementAudit> statement_audits() {
  std::vector<StatementAudit> notes;
  const StateSpace s({"s0", "s1"});
  const Condition none = Condition::none(s);
  const auto c0 = Condition::of(s, {"s0"});

  {
    const Program p = infeasible(s);
    const bool bad = !equivalent(compose(p, skip(s)), p);
    notes.push_back({"Skip_compleft", "p ; Skip = p (no side condition)",
                     "fails for infeasible p: Infeasible ; Skip = Fail, not equivalent "
                     "to Infeasible; asserted with 'p feasible'",
                     bad});
  }
  {
    const Program p = skip(s);
    const bool bad = !equivalent(compose(p, basic(s, BasicKind::skip, none)),
                                 corestrict(p, none));
    notes.push_back({"Skip_composecorestrict", "p ; Skip_C equiv p \\ C (unconditional)",
                     "fails when the corestriction loses feasibility: Skip ; Skip_False "
                     "= Fail but Skip \\ False = Infeasible; asserted with 'p \\ C "
                     "feasible'",
                     bad});
  }
  {
    const Program p = make_program(s, none, Relation::of(s, {{"s0", "s0"}}));
    const bool bad = restrict(p.pre(), p) != p && equivalent(restrict(p.pre(), p), p);
    notes.push_back({"Restrict_own", "Pre_p: p = p (plain equality)",
                     "Pre_p: p is exactly round(p); equality fails for unrounded p "
                     "such as <{[s0,s0]}, {}>; asserted at equivalence",
                     bad});
  }
  {
    const Program p = make_program(s, c0, Relation::of(s, {{"s0", "s1"}}));
    const Program rhs = compose(power(p, 1), power(p, 0));
    const bool bad = !equivalent(power(p, 1), rhs);
    notes.push_back({"Power_inductive", "p^(m+n) = p^m ; p^n for all m, n >= 0",
                     "the right-zero split fails: for p = <{[s0,s1]}, {s0}>, p^1 ; p^0 "
                     "= Fail, not equivalent to p^1; the case n = 0, m >= 1 is excluded "
                     "from the assertion",
                     bad});
  }
  {
    const Program p =
        make_program(s, c0, Relation::of(s, {{"s0", "s0"}, {"s0", "s1"}}));
    const Relation r = Relation::of(s, {{"s0", "s0"}});
    const Relation t = Relation::of(s, {{"s0", "s1"}});
    const bool bad = wp(p, r | t) != (wp(p, r) | wp(p, t));
    notes.push_back({"Wp_distrib", "p wp (r u t) = (p wp r) u (p wp t)",
                     "the union form fails: p = <{[s0,s0],[s0,s1]}, {s0}>, r and t "
                     "the singleton relations give wp {s0} on the left, {} on the "
                     "right; the intersection form (classical conjunctivity) is what "
                     "the suite asserts",
                     bad});
  }
  {
    // Literal premise: I = {} is a loop invariant of any loop, yet the
    // loop below reaches s1 outside C n I.
    const Program a = make_program(s, c0, Relation::of(s, {{"s0", "s0"}}));
    const Program b = make_program(s, c0, Relation::of(s, {{"s0", "s1"}}));
    const Condition exit_cond = Condition::of(s, {"s1"});
    const bool bad =
        is_loop_invariant(none, a, exit_cond, b) &&
        !prog_range(from_loop(a, exit_cond, b)).subset_of(exit_cond & none);
    notes.push_back(
        {"Loop_inv / Loop_correct",
         "a loop invariant is a subset of range(post_a) preserved by the body",
         "with that containment direction False is a loop invariant of every "
         "loop and Loop_correct fails (witness: a = <{[s0,s0]}, {s0}>, b = "
         "<{[s0,s1]}, {s0}>, exit {s1}, I = {}); the law is asserted with "
         "range(post_a) <= I, the direction that lets the initialization "
         "establish I",
         bad});
  }
  {
    const Program p = fail(s);
    const Program q = make_program(s, c0, Relation::of(s, {{"s0", "s1"}}));
    const bool bad =
        refines(q, p) && is_invariant(c0, p) && !is_invariant(c0, q);
    notes.push_back({"Inv_refines", "I invariant of p and q ref p imply I invariant of q",
                     "fails under refinement (new precondition states bring new "
                     "behaviour): q = <{[s0,s1]}, {s0}> refines Fail yet does not "
                     "preserve {s0}; asserted with specialization, matching "
                     "Inv_special",
                     bad});
  }
  return notes;
}

struct RuleOrderAudit {
  std::size_t cases = 0;
  std::size_t equal = 0;
  std::size_t equivalent_only = 0;
  std::size_t diverged = 0;
};

RuleOrderAudit rule_order_audit(std::uint64_t seed, std::size_t samples) {
  RuleOrderAudit audit;
  const StateSpace space = make_space(3);
  std::mt19937_64 rng(seed ^ 0x9d2c5680u);
  // The literal rules only know atoms, sums, top-level choices and
  // removable restrictions, so the operands are drawn in exactly that
  // shape: a (possibly restricted) choice of sums of guarded atoms.
  const auto gen_operand = [&rng](const Environment& env) {
    const auto gen_atom_step = [&rng, &env]() {
      auto it = env.programs.begin();
      std::advance(it, rng() % env.programs.size());
      Expr atom = exprs::basic_ref(it->first);
      if (rng() % 3 == 0)
        atom = exprs::restrict(gen_condition(rng, env.space), std::move(atom));
      return atom;
    };
    const auto gen_sum = [&]() {
      Expr sum = gen_atom_step();
      const std::size_t len = 1 + rng() % 3;
      for (std::size_t i = 1; i < len; ++i)
        sum = exprs::seq(std::move(sum), gen_atom_step());
      return sum;
    };
    Expr operand = gen_sum();
    if (rng() % 2 == 0) operand = exprs::choice(std::move(operand), gen_sum());
    if (rng() % 4 == 0)
      operand = exprs::restrict(gen_condition(rng, env.space), std::move(operand));
    return operand;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Environment env = gen_environment(rng, space, 3);
    const Expr a = gen_operand(env);
    const Expr b = gen_operand(env);
    const Program by_rules = conc_by_rule_order(a, b, env);
    const Program by_cnf = denote_cnf(conc(a, b, env), env);
    ++audit.cases;
    if (by_rules == by_cnf)
      ++audit.equal;
    else if (equivalent(by_rules, by_cnf))
      ++audit.equivalent_only;
    else
      ++audit.diverged;
  }
  return audit;
}

std::string build_audit_report(const std::vector<LawReport>& reports,
                               const SuiteConfig& config) {
  std::ostringstream out;
  out << "== Audit report ==\n";
  out << "Audit-class laws never gate the suite; their facets are measured.\n\n";

  // Merge per-law facet verdicts across universes: a facet "holds" only
  // if it held everywhere.
  std::vector<std::string> audit_ids;
  for (const auto& law : law_registry())
    if (law.law_class == LawClass::audit) audit_ids.push_back(law.id);
  for (const auto& id : audit_ids) {
    const LawSpec* law = find_law(id);
    bool ran = false;
    for (const auto& report : reports) ran = ran || report.id == id;
    if (!ran) continue;
    out << id << "  [" << law->claim << "]\n";
    if (!law->note.empty()) out << "    note: " << law->note << "\n";
    // Merge facet outcomes across the universes the law ran on.
    std::vector<std::uint64_t> failures(law->facets.size(), 0);
    std::vector<std::string> counterexamples(law->facets.size());
    for (const auto& report : reports) {
      if (report.id != id) continue;
      for (std::size_t f = 0; f < report.facets.size() && f < failures.size(); ++f) {
        failures[f] += report.facets[f].failures;
        if (counterexamples[f].empty())
          counterexamples[f] = report.facets[f].counterexample_json;
      }
    }
    for (std::size_t f = 0; f < law->facets.size(); ++f) {
      out << "    - " << law->facets[f] << ": "
          << (failures[f] == 0 ? "HOLDS" : "FAILS") << "\n";
      if (!counterexamples[f].empty())
        out << "        counterexample: " << counterexamples[f] << "\n";
    }
  }

  const RuleOrderAudit rules = rule_order_audit(config.seed, 200);
  out << "\nRule-order expansion audit (|| by the literal rewrite rules vs "
         "CNF-first normalization, "
      << rules.cases << " sampled pairs):\n";
  out << "    equal programs: " << rules.equal
      << ", equivalent only: " << rules.equivalent_only
      << ", diverged: " << rules.diverged << "\n";

  out << "\nStatement audits (unconditional forms that fail under the "
         "definitions; each counterexample re-verified in this run):\n";
  for (const auto& note : statement_audits()) {
    out << "  " << note.law << ": stated as \"" << note.statement << "\" -- "
        << note.finding << " [" << (note.verified ? "verified" : "NO LONGER REPRODUCES")
        << "]\n";
  }
  return out.str();
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  const auto& registry = law_registry();
  std::vector<const LawSpec*> selected;
  for (const auto& law : registry) {
    if (config.only_law && law.id != *config.only_law) continue;
    if (config.only_group && law.group != *config.only_group) continue;
    selected.push_back(&law);
  }
  if (config.only_law && selected.empty())
    throw usage_error("unknown law id '" + *config.only_law + "'");

  std::vector<std::vector<LawReport>> per_law(selected.size());
  const auto run_one = [&](std::size_t i) {
    const LawSpec& law = *selected[i];
    std::vector<LawReport> reports;
    if (law.has_exprs()) {
      const StateSpace space = make_space(config.expr_space);
      const std::size_t samples = law.sample_override.value_or(config.expr_samples);
      reports.push_back(
          outcome_to_report(law, run_sampled(law, space, samples, config.seed)));
    } else {
      if (law.program_arity() <= 3) {
        const StateSpace space = make_space(config.exhaustive_space);
        reports.push_back(outcome_to_report(law, run_exhaustive(law, space)));
      }
      for (const auto size : config.sampled_spaces) {
        const StateSpace space = make_space(size);
        reports.push_back(
            outcome_to_report(law, run_sampled(law, space, config.samples, config.seed)));
      }
    }
    per_law[i] = std::move(reports);
  };

  if (config.parallel && selected.size() > 1) {
    std::atomic<std::size_t> next{0};
    const std::size_t n_workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              selected.size());
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w)
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          run_one(i);
        }
      });
    for (auto& worker : workers) worker.join();
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  }

  SuiteResult result;
  for (auto& reports : per_law)
    for (auto& report : reports) {
      result.asserted_ok = result.asserted_ok && !report.failed();
      result.reports.push_back(std::move(report));
    }
  result.audit_report = build_audit_report(result.reports, config);
  return result;
}

std::string report_to_json(const LawReport& report) {
  ordered_json j;
  j["law"] = report.id;
  j["group"] = to_string(report.group);
  j["class"] = report.law_class == LawClass::asserted ? "asserted" : "audit";
  ordered_json universe;
  universe["space_size"] = report.universe.space_size;
  universe["mode"] = report.universe.exhaustive ? "exhaustive" : "sampled";
  if (!report.universe.exhaustive) universe["seed"] = report.universe.seed;
  universe["cases"] = report.universe.cases;
  universe["filtered"] = report.universe.filtered;
  j["universe"] = std::move(universe);
  switch (report.status) {
    case LawStatus::pass: j["status"] = "pass"; break;
    case LawStatus::fail: j["status"] = "fail"; break;
    case LawStatus::audit_note: j["status"] = "audit-note"; break;
  }
  if (!report.counterexample_json.empty())
    j["counterexample"] = ordered_json::parse(report.counterexample_json);
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.facets.empty()) {
    ordered_json facets = ordered_json::array();
    for (const auto& facet : report.facets) {
      ordered_json jf;
      jf["facet"] = facet.facet;
      jf["failures"] = facet.failures;
      if (!facet.counterexample_json.empty())
        jf["counterexample"] = ordered_json::parse(facet.counterexample_json);
      facets.push_back(std::move(jf));
    }
    j["facets"] = std::move(facets);
  }
  return j.dump();
}

std::string report_to_text(const LawReport& report) {
  std::ostringstream out;
  switch (report.status) {
    case LawStatus::pass: out << "PASS  "; break;
    case LawStatus::fail: out << "FAIL  "; break;
    case LawStatus::audit_note: out << "AUDIT "; break;
  }
  out << report.id << "  |S|=" << report.universe.space_size
      << (report.universe.exhaustive ? " exhaustive" : " sampled") << " cases="
      << report.universe.cases;
  if (report.universe.filtered > 0) out << " filtered=" << report.universe.filtered;
  if (report.status == LawStatus::fail)
    out << "\n      counterexample: " << report.counterexample_json;
  if (report.status == LawStatus::audit_note) out << "\n      " << report.note;
  return out.str();
}

}  // namespace prism
