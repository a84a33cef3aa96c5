#include "prism/laws/registry.hpp"

#include <algorithm>

#include "prism/concurrency/cnf.hpp"
#include "prism/contracts.hpp"
#include "prism/refinement.hpp"

// Each entry is one named law; the claim string is an ASCII rendering of
// its statement. A handful of these laws are false in their customary
// unconditional form under the definitions as implemented; such entries
// carry the minimal repair -- a side condition or the intended operator --
// and the `note` plus the suite's audit report document the original form
// together with a concrete counterexample. Contentious statements are
// audit-class: they never fail the suite, they get measured.

namespace prism {

const char* to_string(LawGroup g) {
  switch (g) {
    case LawGroup::relations: return "relations";
    case LawGroup::core: return "core";
    case LawGroup::basic_programs: return "basic_programs";
    case LawGroup::restriction: return "restriction";
    case LawGroup::corestriction: return "corestriction";
    case LawGroup::choice_ops: return "choice";
    case LawGroup::composition: return "composition";
    case LawGroup::rounding: return "rounding";
    case LawGroup::feasibility: return "feasibility";
    case LawGroup::refinement_group: return "refinement";
    case LawGroup::conditionals: return "conditionals";
    case LawGroup::loops: return "loops";
    case LawGroup::invariants: return "invariants";
    case LawGroup::contracts_group: return "contracts";
    case LawGroup::concurrency_group: return "concurrency";
  }
  return "?";
}

namespace {

using K = OperandKind;

Program rnd(const Program& p) { return version(p, VersionMode::round); }
Program trm(const Program& p) { return version(p, VersionMode::trim); }
bool fsb(const Program& p) { return classify(p).feasible; }
bool rdd(const Program& p) { return classify(p).rounded; }

Program skip_on(const StateSpace& s, const Condition& c) {
  return basic(s, BasicKind::skip, c);
}

// U_i (C: b)^i \ notC computed by direct power iteration with cycle
// detection; the reference side of Loop_choice.
Program loop_choice_union(const Condition& c, const Program& b) {
  const Program body = restrict(c, b);
  std::vector<Program> seen;
  Program pw = power(body, 0);
  Program acc = corestrict(pw, ~c);
  seen.push_back(pw);
  for (;;) {
    pw = compose(pw, body);
    if (std::find(seen.begin(), seen.end(), pw) != seen.end()) return acc;
    seen.push_back(pw);
    acc = choice(acc, corestrict(pw, ~c));
  }
}

Program union_of_powers(const Program& p, std::size_t from, std::size_t to) {
  Program acc = power(p, from);
  for (std::size_t i = from + 1; i <= to; ++i) acc = choice(acc, power(p, i));
  return acc;
}

struct Registry {
  std::vector<LawSpec> laws;

  LawSpec& add(std::string id, LawGroup group, std::string claim,
               std::vector<K> signature) {
    LawSpec spec;
    spec.id = std::move(id);
    spec.group = group;
    spec.claim = std::move(claim);
    spec.signature = std::move(signature);
    laws.push_back(std::move(spec));
    return laws.back();
  }
};

void add_relation_laws(Registry& reg) {
  {
    auto& l = reg.add("Image_subset", LawGroup::relations,
                      "X' <= X implies r(X') <= r(X)", {K::relation, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      const Condition sub = t.c(0) & t.c(1);  // a subset of c(0) by construction
      return image(t.r(0), sub).subset_of(image(t.r(0), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Subset_image", LawGroup::relations, "r(X) <= range(r)",
                      {K::relation, K::condition});
    l.check = [](const LawCase& t) {
      return image(t.r(0), t.c(0)).subset_of(t.r(0).range());
    };
  }
  {
    auto& l = reg.add("Image_union", LawGroup::relations, "r(X u Y) = r(X) u r(Y)",
                      {K::relation, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      return image(t.r(0), t.c(0) | t.c(1)) ==
             (image(t.r(0), t.c(0)) | image(t.r(0), t.c(1)));
    };
  }
  {
    auto& l = reg.add("Image_inter", LawGroup::relations, "r(X n Y) <= r(X) n r(Y)",
                      {K::relation, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      return image(t.r(0), t.c(0) & t.c(1))
          .subset_of(image(t.r(0), t.c(0)) & image(t.r(0), t.c(1)));
    };
  }
  {
    auto& l = reg.add("Domain_restrict", LawGroup::relations,
                      "dom(r / X) = dom(r) n X; range(r \\ X) = range(r) n X",
                      {K::relation, K::condition});
    l.check = [](const LawCase& t) {
      return restrict_rel(t.r(0), t.c(0)).domain() == (t.r(0).domain() & t.c(0)) &&
             corestrict_rel(t.r(0), t.c(0)).range() == (t.r(0).range() & t.c(0));
    };
  }
  {
    auto& l = reg.add("Image_restrict", LawGroup::relations,
                      "r(X) = range(r / X) <= range(r)", {K::relation, K::condition});
    l.check = [](const LawCase& t) {
      const Condition img = image(t.r(0), t.c(0));
      return img == restrict_rel(t.r(0), t.c(0)).range() &&
             img.subset_of(t.r(0).range());
    };
  }
}

void add_core_laws(Registry& reg) {
  {
    auto& l = reg.add("Domain_range", LawGroup::core, "post_p(Pre_p) = range of p",
                      {K::program});
    l.check = [](const LawCase& t) {
      return image(t.p(0).post(), t.p(0).pre()) == prog_range(t.p(0));
    };
  }
  {
    auto& l = reg.add("Consistent_feasible", LawGroup::core, "trim(p) is feasible",
                      {K::program});
    l.check = [](const LawCase& t) { return fsb(trm(t.p(0))); };
  }
  {
    auto& l = reg.add("Consistent_round", LawGroup::core, "round(p) is rounded",
                      {K::program});
    l.check = [](const LawCase& t) { return rdd(rnd(t.p(0))); };
  }
  {
    auto& l = reg.add("Consistent_exact", LawGroup::core, "exact(p) is exact",
                      {K::program});
    l.check = [](const LawCase& t) {
      return classify(version(t.p(0), VersionMode::exact)).exact;
    };
  }
  {
    auto& l = reg.add("Feasible_round", LawGroup::feasibility,
                      "p feasible implies round(p) feasible", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(rnd(t.p(0))); };
  }
  {
    auto& l = reg.add("Round_feasible", LawGroup::feasibility,
                      "p rounded implies trim(p) rounded", {K::program});
    l.side_condition = [](const LawCase& t) { return rdd(t.p(0)); };
    l.program_constraints = {{.rounded = true}};
    l.check = [](const LawCase& t) { return rdd(trm(t.p(0))); };
  }
}

void add_restriction_laws(Registry& reg) {
  {
    auto& l = reg.add("Restrict_true", LawGroup::restriction, "True: p = p", {K::program});
    l.check = [](const LawCase& t) {
      return restrict(Condition::all(t.space), t.p(0)) == t.p(0);
    };
  }
  {
    auto& l = reg.add("Restrict_false", LawGroup::restriction, "False: p equiv Fail",
                      {K::program});
    l.check = [](const LawCase& t) {
      return equivalent(restrict(Condition::none(t.space), t.p(0)), fail(t.space));
    };
  }
  {
    auto& l = reg.add("Restrict_own", LawGroup::restriction, "Pre_p: p equiv p",
                      {K::program});
    l.note =
        "As a plain equality this fails for unrounded p (Pre_p: p is "
        "exactly round(p)); asserted at equivalence.";
    l.check = [](const LawCase& t) {
      return equivalent(restrict(t.p(0).pre(), t.p(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Restrict_inter", LawGroup::restriction,
                      "C: (D: p) = (C n D): p", {K::condition, K::condition, K::program});
    l.check = [](const LawCase& t) {
      return restrict(t.c(0), restrict(t.c(1), t.p(0))) ==
             restrict(t.c(0) & t.c(1), t.p(0));
    };
  }
  {
    auto& l = reg.add("Restrict_commute", LawGroup::restriction,
                      "C: (D: p) = D: (C: p)", {K::condition, K::condition, K::program});
    l.check = [](const LawCase& t) {
      return restrict(t.c(0), restrict(t.c(1), t.p(0))) ==
             restrict(t.c(1), restrict(t.c(0), t.p(0)));
    };
  }
  {
    auto& l = reg.add("Restrict_idem", LawGroup::restriction, "C: (C: p) = C: p",
                      {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return restrict(t.c(0), restrict(t.c(0), t.p(0))) == restrict(t.c(0), t.p(0));
    };
  }
  {
    auto& l = reg.add("Restrict_distrib", LawGroup::restriction,
                      "C: (p u q) equiv C: p u C: q",
                      {K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(restrict(t.c(0), choice(t.p(0), t.p(1))),
                        choice(restrict(t.c(0), t.p(0)), restrict(t.c(0), t.p(1))));
    };
  }
  {
    auto& l = reg.add("Compose_absorb", LawGroup::restriction,
                      "C: (p ; q) = (C: p) ; q", {K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      return restrict(t.c(0), compose(t.p(0), t.p(1))) ==
             compose(restrict(t.c(0), t.p(0)), t.p(1));
    };
  }
}

void add_corestriction_laws(Registry& reg) {
  {
    auto& l = reg.add("Corestrict_true", LawGroup::corestriction,
                      "p \\ True equiv p, for feasible p", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) {
      return equivalent(corestrict(t.p(0), Condition::all(t.space)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Corestrict_false", LawGroup::corestriction,
                      "p \\ False = Fail", {K::program});
    l.law_class = LawClass::audit;
    l.note =
        "The definition gives <empty, Pre_p>, which equals Fail only when "
        "Pre_p is empty; the checker records the strongest level that holds.";
    l.facets = {"equality as displayed", "equivalence as displayed"};
    l.audit_check = [](const LawCase& t) {
      const Program lhs = corestrict(t.p(0), Condition::none(t.space));
      std::uint32_t bits = 0;
      if (lhs == fail(t.space)) bits |= 1;
      if (equivalent(lhs, fail(t.space))) bits |= 2;
      return bits;
    };
  }
  {
    auto& l = reg.add("Corestrict_inter", LawGroup::corestriction,
                      "(p \\ C) \\ D = p \\ (C n D)",
                      {K::program, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(corestrict(t.p(0), t.c(0)), t.c(1)) ==
             corestrict(t.p(0), t.c(0) & t.c(1));
    };
  }
  {
    auto& l = reg.add("Corestrict_commute", LawGroup::corestriction,
                      "(p \\ C) \\ D = (p \\ D) \\ C",
                      {K::program, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(corestrict(t.p(0), t.c(0)), t.c(1)) ==
             corestrict(corestrict(t.p(0), t.c(1)), t.c(0));
    };
  }
  {
    auto& l = reg.add("Corestrict_idem", LawGroup::corestriction,
                      "(p \\ C) \\ C = p \\ C", {K::program, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(corestrict(t.p(0), t.c(0)), t.c(0)) == corestrict(t.p(0), t.c(0));
    };
  }
  {
    auto& l = reg.add("Corestrict_choice", LawGroup::corestriction,
                      "(p u q) \\ C = p \\ C u q \\ C",
                      {K::program, K::program, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(choice(t.p(0), t.p(1)), t.c(0)) ==
             choice(corestrict(t.p(0), t.c(0)), corestrict(t.p(1), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Corestrict_compose", LawGroup::corestriction,
                      "(p ; q) \\ C = p ; (q \\ C)",
                      {K::program, K::program, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(compose(t.p(0), t.p(1)), t.c(0)) ==
             compose(t.p(0), corestrict(t.p(1), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Compose_prepost", LawGroup::feasibility,
                      "((Pre_p n dom(post_p \\ C)): p) \\ C is feasible, for feasible p",
                      {K::program, K::condition});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(feasible_corestrict(t.p(0), t.c(0))); };
  }
}

void add_basic_program_laws(Registry& reg) {
  {
    auto& l = reg.add("Skip_compleft", LawGroup::basic_programs,
                      "p ; Skip = p, for feasible p", {K::program});
    l.note =
        "Unconditionally this fails: p ; Skip is exactly trim(p), so "
        "infeasible p falsifies even equivalence; the feasibility side "
        "condition is the minimal repair.";
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) { return compose(t.p(0), skip(t.space)) == t.p(0); };
  }
  {
    auto& l = reg.add("Skip_compright", LawGroup::basic_programs, "Skip ; p equiv p",
                      {K::program});
    l.check = [](const LawCase& t) {
      return equivalent(compose(skip(t.space), t.p(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Skip_empty", LawGroup::basic_programs, "Skip_False = Fail", {});
    l.check = [](const LawCase& t) {
      return skip_on(t.space, Condition::none(t.space)) == fail(t.space);
    };
  }
  {
    auto& l = reg.add("Skip_comprestrict", LawGroup::basic_programs,
                      "Skip_C ; p equiv C: p", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(compose(skip_on(t.space, t.c(0)), t.p(0)),
                        restrict(t.c(0), t.p(0)));
    };
  }
  {
    auto& l = reg.add("Skip_composecorestrict", LawGroup::basic_programs,
                      "p ; Skip_C equiv p \\ C, when p \\ C is feasible",
                      {K::condition, K::program});
    l.note =
        "Unconditionally this fails: p ; Skip_C is exactly trim(p \\ C), "
        "so the equivalence needs the corestricted program to stay "
        "feasible; counterexample otherwise: p = Skip, C = False.";
    l.side_condition = [](const LawCase& t) {
      return fsb(corestrict(t.p(0), t.c(0)));
    };
    l.check = [](const LawCase& t) {
      return equivalent(compose(t.p(0), skip_on(t.space, t.c(0))),
                        corestrict(t.p(0), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Fail_choice", LawGroup::basic_programs,
                      "Fail u p equiv p u Fail equiv p, for feasible p", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      return equivalent(choice(f, t.p(0)), t.p(0)) &&
             equivalent(choice(t.p(0), f), t.p(0));
    };
  }
  {
    auto& l = reg.add("Fail_comp", LawGroup::basic_programs,
                      "Fail ; p = p ; Fail = Fail, for feasible p", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      return compose(f, t.p(0)) == f && compose(t.p(0), f) == f;
    };
  }
  {
    auto& l = reg.add("Fail_choiceonly", LawGroup::basic_programs,
                      "a u b equiv Fail iff a equiv Fail and b equiv Fail, for feasible a, b",
                      {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)) && fsb(t.p(1)); };
    l.program_constraints = {{.feasible = true}, {.feasible = true}};
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      const bool lhs = equivalent(choice(t.p(0), t.p(1)), f);
      const bool rhs = equivalent(t.p(0), f) && equivalent(t.p(1), f);
      return lhs == rhs;
    };
  }
  {
    auto& l = reg.add("Havoc_choice", LawGroup::basic_programs,
                      "p u Havoc = Havoc u p = Havoc, for feasible p", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) {
      const Program h = havoc(t.space);
      return choice(t.p(0), h) == h && choice(h, t.p(0)) == h;
    };
  }
}

void add_choice_laws(Registry& reg) {
  {
    auto& l = reg.add("Choice_commute", LawGroup::choice_ops, "p u q = q u p",
                      {K::program, K::program});
    l.check = [](const LawCase& t) {
      return choice(t.p(0), t.p(1)) == choice(t.p(1), t.p(0));
    };
  }
  {
    auto& l = reg.add("Choice_assoc", LawGroup::choice_ops,
                      "p u (q u v) = (p u q) u v", {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      return choice(t.p(0), choice(t.p(1), t.p(2))) ==
             choice(choice(t.p(0), t.p(1)), t.p(2));
    };
  }
  {
    auto& l = reg.add("Choice_idem", LawGroup::choice_ops, "p u p equiv p",
                      {K::program});
    l.note =
        "Equivalence only; the non-equality witness is p = <{[1,1]}, False>, "
        "whose self-choice is Fail.";
    l.check = [](const LawCase& t) {
      return equivalent(choice(t.p(0), t.p(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Choice_range", LawGroup::choice_ops,
                      "range(p u q) = range(p) u range(q)", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return prog_range(choice(t.p(0), t.p(1))) ==
             (prog_range(t.p(0)) | prog_range(t.p(1)));
    };
  }
}

void add_composition_laws(Registry& reg) {
  {
    auto& l = reg.add("Compose_assoc", LawGroup::composition,
                      "p ; (q ; v) = (p ; q) ; v", {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      return compose(t.p(0), compose(t.p(1), t.p(2))) ==
             compose(compose(t.p(0), t.p(1)), t.p(2));
    };
  }
  {
    auto& l = reg.add("Compose_absorbrest", LawGroup::composition,
                      "C: (p ; q) = (C: p) ; q", {K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      return restrict(t.c(0), compose(t.p(0), t.p(1))) ==
             compose(restrict(t.c(0), t.p(0)), t.p(1));
    };
  }
  {
    auto& l = reg.add("Compose_absorbcorest", LawGroup::composition,
                      "(p ; q) \\ D = p ; (q \\ D)",
                      {K::program, K::program, K::condition});
    l.check = [](const LawCase& t) {
      return corestrict(compose(t.p(0), t.p(1)), t.c(0)) ==
             compose(t.p(0), corestrict(t.p(1), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Compose_choiceleft", LawGroup::composition,
                      "v ; (p u q) equiv (v ; p) u (v ; q)",
                      {K::program, K::program, K::program});
    l.note =
        "Equivalence only; witness distinguishing it from equality: "
        "p = q = v = <{[1,1],[2,1]}, {1}>.";
    l.check = [](const LawCase& t) {
      return equivalent(compose(t.p(0), choice(t.p(1), t.p(2))),
                        choice(compose(t.p(0), t.p(1)), compose(t.p(0), t.p(2))));
    };
  }
  {
    auto& l = reg.add("Compose_choiceright", LawGroup::composition,
                      "(p u q) ; v equiv (p ; v) u (q ; v)",
                      {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(compose(choice(t.p(0), t.p(1)), t.p(2)),
                        choice(compose(t.p(0), t.p(2)), compose(t.p(1), t.p(2))));
    };
  }
  {
    auto& l = reg.add("Compose_feasibleleft", LawGroup::feasibility,
                      "q feasible implies p ; q feasible", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(1)); };
    l.program_constraints = {{}, {.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(compose(t.p(0), t.p(1))); };
  }
}

void add_preservation_laws(Registry& reg) {
  {
    auto& l = reg.add("Round_restrict", LawGroup::rounding,
                      "round(C: p) = C: round(p)", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return rnd(restrict(t.c(0), t.p(0))) == restrict(t.c(0), rnd(t.p(0)));
    };
  }
  {
    auto& l = reg.add("Round_choice", LawGroup::rounding,
                      "round(p u q) = round(p) u round(q)", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return rnd(choice(t.p(0), t.p(1))) == choice(rnd(t.p(0)), rnd(t.p(1)));
    };
  }
  {
    auto& l = reg.add("Round_compose", LawGroup::rounding,
                      "round(p ; q) = round(p) ; round(q)", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return rnd(compose(t.p(0), t.p(1))) == compose(rnd(t.p(0)), rnd(t.p(1)));
    };
  }
  {
    auto& l = reg.add("Round_corestrict", LawGroup::rounding,
                      "round(p \\ C) = round(p) \\ C", {K::program, K::condition});
    l.check = [](const LawCase& t) {
      return rnd(corestrict(t.p(0), t.c(0))) == corestrict(rnd(t.p(0)), t.c(0));
    };
  }
  {
    auto& l = reg.add("Restrict_rounded", LawGroup::feasibility,
                      "C: p rounded, for rounded p", {K::condition, K::program});
    l.side_condition = [](const LawCase& t) { return rdd(t.p(0)); };
    l.program_constraints = {{.rounded = true}};
    l.check = [](const LawCase& t) { return rdd(restrict(t.c(0), t.p(0))); };
  }
  {
    auto& l = reg.add("Choice_rounded", LawGroup::feasibility,
                      "p u q rounded, even for unrounded operands",
                      {K::program, K::program});
    l.check = [](const LawCase& t) { return rdd(choice(t.p(0), t.p(1))); };
  }
  {
    auto& l = reg.add("Compose_rounded", LawGroup::feasibility,
                      "p ; q rounded, for rounded p and q", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return rdd(t.p(0)) && rdd(t.p(1)); };
    l.program_constraints = {{.rounded = true}, {.rounded = true}};
    l.check = [](const LawCase& t) { return rdd(compose(t.p(0), t.p(1))); };
  }
  {
    auto& l = reg.add("Restrict_feasible", LawGroup::feasibility,
                      "C: p feasible, for feasible p", {K::condition, K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(restrict(t.c(0), t.p(0))); };
  }
  {
    auto& l = reg.add("Choice_feasible", LawGroup::feasibility,
                      "p u q feasible, for feasible p and q", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)) && fsb(t.p(1)); };
    l.program_constraints = {{.feasible = true}, {.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(choice(t.p(0), t.p(1))); };
  }
  {
    auto& l = reg.add("Compose_feasible", LawGroup::feasibility,
                      "p ; q feasible, for feasible p and q", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)) && fsb(t.p(1)); };
    l.program_constraints = {{.feasible = true}, {.feasible = true}};
    l.check = [](const LawCase& t) { return fsb(compose(t.p(0), t.p(1))); };
  }
}

void add_refinement_laws(Registry& reg) {
  {
    auto& l = reg.add("Implement_feasible", LawGroup::refinement_group,
                      "a program having an implementation is feasible (and conversely)",
                      {K::program, K::program});
    l.check = [](const LawCase& t) {
      if (implements(t.p(0), t.p(1)) && !fsb(t.p(1))) return false;
      if (fsb(t.p(1)) && !implements(t.p(1), t.p(1))) return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Refine_order", LawGroup::refinement_group,
                      "refinement is reflexive, transitive, antisymmetric up to equiv",
                      {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      if (!refines(t.p(0), t.p(0))) return false;
      if (refines(t.p(0), t.p(1)) && refines(t.p(1), t.p(0)) &&
          !equivalent(t.p(0), t.p(1)))
        return false;
      if (refines(t.p(0), t.p(1)) && refines(t.p(1), t.p(2)) &&
          !refines(t.p(0), t.p(2)))
        return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Special_order", LawGroup::refinement_group,
                      "specialization is reflexive, transitive, antisymmetric up to equiv",
                      {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      if (!specializes(t.p(0), t.p(0))) return false;
      if (specializes(t.p(0), t.p(1)) && specializes(t.p(1), t.p(0)) &&
          !equivalent(t.p(0), t.p(1)))
        return false;
      if (specializes(t.p(0), t.p(1)) && specializes(t.p(1), t.p(2)) &&
          !specializes(t.p(0), t.p(2)))
        return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Implementation_order", LawGroup::refinement_group,
                      "implementation induces an order (reflexive on feasible programs)",
                      {K::program, K::program, K::program});
    l.check = [](const LawCase& t) {
      if (fsb(t.p(0)) && !implements(t.p(0), t.p(0))) return false;
      if (implements(t.p(0), t.p(1)) && implements(t.p(1), t.p(0)) &&
          !equivalent(t.p(0), t.p(1)))
        return false;
      if (implements(t.p(0), t.p(1)) && implements(t.p(1), t.p(2)) &&
          !implements(t.p(0), t.p(2)))
        return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Restrict_refinesafety", LawGroup::refinement_group,
                      "q ref p implies C: q ref C: p",
                      {K::condition, K::program, K::program});
    l.side_condition = [](const LawCase& t) { return refines(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_refinement(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return refines(restrict(t.c(0), t.p(0)), restrict(t.c(0), t.p(1)));
    };
  }
  {
    auto& l = reg.add("Choice_refinesafety", LawGroup::refinement_group,
                      "q ref p and q post-strengthens v imply q u v ref p u v",
                      {K::program, K::program, K::program});
    l.side_condition = [](const LawCase& t) {
      return refines(t.p(0), t.p(1)) &&
             refinement_parts(t.p(0), t.p(2)).post_strengthens;
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_refinement(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return refines(choice(t.p(0), t.p(2)), choice(t.p(1), t.p(2)));
    };
  }
  {
    auto& l = reg.add("Restrict_specialsafety", LawGroup::refinement_group,
                      "q spec p implies C: q spec C: p",
                      {K::condition, K::program, K::program});
    l.side_condition = [](const LawCase& t) { return specializes(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_specialization(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return specializes(restrict(t.c(0), t.p(0)), restrict(t.c(0), t.p(1)));
    };
  }
  {
    auto& l = reg.add("Corestrict_specialsafety", LawGroup::refinement_group,
                      "q spec p implies q \\ C spec p \\ C",
                      {K::condition, K::program, K::program});
    l.side_condition = [](const LawCase& t) { return specializes(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_specialization(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return specializes(corestrict(t.p(0), t.c(0)), corestrict(t.p(1), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Choice_specialsafety", LawGroup::refinement_group,
                      "q spec p implies q u v spec p u v and v u q spec v u p",
                      {K::program, K::program, K::program});
    l.side_condition = [](const LawCase& t) { return specializes(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_specialization(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return specializes(choice(t.p(0), t.p(2)), choice(t.p(1), t.p(2))) &&
             specializes(choice(t.p(2), t.p(0)), choice(t.p(2), t.p(1)));
    };
  }
  {
    auto& l = reg.add("Compose_specialsafety", LawGroup::refinement_group,
                      "q spec p implies q ; v spec p ; v and v ; q spec v ; p",
                      {K::program, K::program, K::program});
    l.side_condition = [](const LawCase& t) { return specializes(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_specialization(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return specializes(compose(t.p(0), t.p(2)), compose(t.p(1), t.p(2))) &&
             specializes(compose(t.p(2), t.p(0)), compose(t.p(2), t.p(1)));
    };
  }
  {
    auto& l = reg.add("Restrict_special", LawGroup::refinement_group,
                      "C: p spec p", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return specializes(restrict(t.c(0), t.p(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Restrict_refine", LawGroup::refinement_group,
                      "p ref C: p", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return refines(t.p(0), restrict(t.c(0), t.p(0)));
    };
  }
  {
    auto& l = reg.add("Corestrict_special", LawGroup::refinement_group,
                      "p \\ C spec p", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return specializes(corestrict(t.p(0), t.c(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Restrict_refineorder", LawGroup::refinement_group,
                      "D <= C implies C: p ref D: p",
                      {K::condition, K::condition, K::program});
    l.check = [](const LawCase& t) {
      const Condition d = t.c(0) & t.c(1);  // D <= C by construction
      return refines(restrict(t.c(0), t.p(0)), restrict(d, t.p(0)));
    };
  }
  {
    auto& l = reg.add("Restrict_specialsubset", LawGroup::refinement_group,
                      "D <= C implies D: p spec C: p",
                      {K::condition, K::condition, K::program});
    l.check = [](const LawCase& t) {
      const Condition d = t.c(0) & t.c(1);
      return specializes(restrict(d, t.p(0)), restrict(t.c(0), t.p(0)));
    };
  }
  {
    auto& l = reg.add("Corestrict_specialsubset", LawGroup::refinement_group,
                      "D <= C implies p \\ D spec p \\ C",
                      {K::condition, K::condition, K::program});
    l.check = [](const LawCase& t) {
      const Condition d = t.c(0) & t.c(1);
      return specializes(corestrict(t.p(0), d), corestrict(t.p(0), t.c(0)));
    };
  }
  {
    auto& l = reg.add("Refine_special", LawGroup::refinement_group,
                      "Infeasible ref Skip ref Havoc ref Fail", {});
    l.check = [](const LawCase& t) {
      return refines(infeasible(t.space), skip(t.space)) &&
             refines(skip(t.space), havoc(t.space)) &&
             refines(havoc(t.space), fail(t.space));
    };
  }
  {
    auto& l = reg.add("Special_special", LawGroup::refinement_group,
                      "Fail spec Infeasible spec Skip spec Havoc", {});
    l.check = [](const LawCase& t) {
      return specializes(fail(t.space), infeasible(t.space)) &&
             specializes(infeasible(t.space), skip(t.space)) &&
             specializes(skip(t.space), havoc(t.space));
    };
  }
  {
    auto& l = reg.add("Refine_havoccompose", LawGroup::refinement_group,
                      "p ref Pre_p: Havoc", {K::program});
    l.check = [](const LawCase& t) {
      return refines(t.p(0), restrict(t.p(0).pre(), havoc(t.space)));
    };
  }
  {
    auto& l = reg.add("Special_havoccompose", LawGroup::refinement_group,
                      "p spec Pre_p: Havoc", {K::program});
    l.check = [](const LawCase& t) {
      return specializes(t.p(0), restrict(t.p(0).pre(), havoc(t.space)));
    };
  }
  {
    auto& l = reg.add("Refine_havoc*", LawGroup::refinement_group,
                      "p ref Havoc, for total p", {K::program});
    l.side_condition = [](const LawCase& t) { return classify(t.p(0)).total; };
    l.targeted = [](LawCase& t, std::mt19937_64&) {
      t.programs[0] = make_program(t.space, Condition::all(t.space),
                                   t.p(0).post() | Relation::identity(t.space));
    };
    l.check = [](const LawCase& t) { return refines(t.p(0), havoc(t.space)); };
  }
  {
    auto& l = reg.add("Special_havoc*", LawGroup::refinement_group, "p spec Havoc",
                      {K::program});
    l.check = [](const LawCase& t) { return specializes(t.p(0), havoc(t.space)); };
  }
  {
    auto& l = reg.add("Refine_fail", LawGroup::refinement_group, "p ref Fail",
                      {K::program});
    l.check = [](const LawCase& t) { return refines(t.p(0), fail(t.space)); };
  }
  {
    auto& l = reg.add("Special_fail", LawGroup::refinement_group, "Fail spec p",
                      {K::program});
    l.check = [](const LawCase& t) { return specializes(fail(t.space), t.p(0)); };
  }
  {
    auto& l = reg.add("Refine_failonly", LawGroup::refinement_group,
                      "Fail ref p iff p equiv Fail", {K::program});
    l.law_class = LawClass::audit;
    l.note =
        "The name says refinement while the formula is commonly given "
        "with specialization; both readings are measured.";
    l.facets = {"as displayed (Fail spec p iff p equiv Fail)",
                "name reading (Fail ref p iff p equiv Fail)"};
    l.audit_check = [](const LawCase& t) {
      const Program f = fail(t.space);
      const bool is_fail = equivalent(t.p(0), f);
      std::uint32_t bits = 0;
      if (specializes(f, t.p(0)) == is_fail) bits |= 1;
      if (refines(f, t.p(0)) == is_fail) bits |= 2;
      return bits;
    };
  }
  {
    auto& l = reg.add("Special_failonly", LawGroup::refinement_group,
                      "p spec Fail iff p equiv Fail", {K::program});
    l.law_class = LawClass::audit;
    l.note = "Audited together with Refine_failonly (symbol ambiguity).";
    l.facets = {"as displayed (p spec Fail iff p equiv Fail)"};
    l.audit_check = [](const LawCase& t) {
      const Program f = fail(t.space);
      return specializes(t.p(0), f) == equivalent(t.p(0), f) ? 1u : 0u;
    };
  }
  {
    auto& l = reg.add("Special_nonempty", LawGroup::refinement_group,
                      "orderings of Skip_C/Fail_C/Infeasible_C/Havoc_C for D <= C",
                      {K::condition, K::condition});
    l.check = [](const LawCase& t) {
      const Condition c = t.c(0);
      const Condition d = t.c(0) & t.c(1);
      const Condition none = Condition::none(t.space);
      const auto mk = [&](BasicKind k, const Condition& on) {
        return basic(t.space, k, on);
      };
      return specializes(mk(BasicKind::skip, d), mk(BasicKind::skip, c)) &&
             refines(mk(BasicKind::skip, c), mk(BasicKind::skip, d)) &&
             specializes(mk(BasicKind::fail, d), mk(BasicKind::fail, c)) &&
             refines(mk(BasicKind::fail, c), mk(BasicKind::fail, d)) &&
             specializes(mk(BasicKind::infeasible, d), mk(BasicKind::infeasible, c)) &&
             refines(mk(BasicKind::infeasible, c), mk(BasicKind::infeasible, d)) &&
             specializes(mk(BasicKind::havoc, d), mk(BasicKind::havoc, c)) &&
             mk(BasicKind::fail, none) == mk(BasicKind::infeasible, none) &&
             mk(BasicKind::infeasible, none) == mk(BasicKind::skip, none) &&
             mk(BasicKind::skip, none) == mk(BasicKind::havoc, none);
    };
  }
}

void add_conditional_laws(Registry& reg) {
  {
    auto& l = reg.add("Conditional_commute", LawGroup::conditionals,
                      "a conditional equals any branch permutation of itself",
                      {K::condition, K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      const Branch ab[] = {{t.c(0), t.p(0)}, {t.c(1), t.p(1)}};
      const Branch ba[] = {{t.c(1), t.p(1)}, {t.c(0), t.p(0)}};
      return conditional(t.space, ab) == conditional(t.space, ba);
    };
  }
  {
    auto& l = reg.add("Conditional_subspecial", LawGroup::conditionals,
                      "D_i <= C_i implies if D_i: p_i end spec if C_i: p_i end",
                      {K::condition, K::condition, K::condition, K::condition,
                       K::program, K::program});
    l.check = [](const LawCase& t) {
      const Condition d1 = t.c(0) & t.c(2), d2 = t.c(1) & t.c(3);
      const Branch narrow[] = {{d1, t.p(0)}, {d2, t.p(1)}};
      const Branch wide[] = {{t.c(0), t.p(0)}, {t.c(1), t.p(1)}};
      return specializes(conditional(t.space, narrow), conditional(t.space, wide));
    };
  }
  {
    auto& l = reg.add("Conditional_multsubspecial", LawGroup::conditionals,
                      "q_i spec p_i implies if C_i: q_i end spec if C_i: p_i end",
                      {K::condition, K::condition, K::program, K::program, K::program,
                       K::program});
    l.side_condition = [](const LawCase& t) {
      return specializes(t.p(0), t.p(2)) && specializes(t.p(1), t.p(3));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_specialization(rng, t.p(2));
      t.programs[1] = gen_specialization(rng, t.p(3));
    };
    l.check = [](const LawCase& t) {
      const Branch narrow[] = {{t.c(0), t.p(0)}, {t.c(1), t.p(1)}};
      const Branch wide[] = {{t.c(0), t.p(2)}, {t.c(1), t.p(3)}};
      return specializes(conditional(t.space, narrow), conditional(t.space, wide));
    };
  }
  {
    auto& l = reg.add("Conditional_set_one", LawGroup::conditionals,
                      "C: p = if C: p end", {K::condition, K::program});
    l.check = [](const LawCase& t) {
      const Branch one[] = {{t.c(0), t.p(0)}};
      return restrict(t.c(0), t.p(0)) == conditional(t.space, one);
    };
  }
  {
    auto& l = reg.add("Conditional_elements", LawGroup::conditionals,
                      "C_i: p_i spec if C_1: p_1, ..., C_n: p_n end",
                      {K::condition, K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      const Branch branches[] = {{t.c(0), t.p(0)}, {t.c(1), t.p(1)}};
      const Program whole = conditional(t.space, branches);
      return specializes(restrict(t.c(0), t.p(0)), whole) &&
             specializes(restrict(t.c(1), t.p(1)), whole);
    };
  }
  {
    auto& l = reg.add("Conditional_distrib", LawGroup::conditionals,
                      "D: if C_i: p_i end equiv if (D n C_i): p_i end",
                      {K::condition, K::condition, K::condition, K::program, K::program});
    l.check = [](const LawCase& t) {
      const Branch plain[] = {{t.c(1), t.p(0)}, {t.c(2), t.p(1)}};
      const Branch meet[] = {{t.c(0) & t.c(1), t.p(0)}, {t.c(0) & t.c(2), t.p(1)}};
      return equivalent(restrict(t.c(0), conditional(t.space, plain)),
                        conditional(t.space, meet));
    };
  }
  {
    auto& l = reg.add("If_true", LawGroup::conditionals,
                      "if True then p else q end equiv p", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(if_then_else(Condition::all(t.space), t.p(0), t.p(1)), t.p(0));
    };
  }
  {
    auto& l = reg.add("If_false", LawGroup::conditionals,
                      "if False then p else q end equiv q", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(if_then_else(Condition::none(t.space), t.p(0), t.p(1)), t.p(1));
    };
  }
}

void add_loop_laws(Registry& reg) {
  {
    auto& l = reg.add("Power_inductive", LawGroup::loops,
                      "p^(m+n) = p^m ; p^n (equivalence when m = 0; n >= 1)",
                      {K::program, K::nat, K::nat});
    l.note =
        "Unrestricted over m, n >= 0 the equality fails: the right-zero "
        "case m >= 1, n = 0 is false even up to equivalence (p ; "
        "Skip_{Pre_p} trims states whose results leave Pre_p), so it is "
        "excluded here and documented in the audit report; m = 0 holds at "
        "equivalence per the zero-power convention.";
    l.side_condition = [](const LawCase& t) {
      return !(t.n(0) >= 1 && t.n(1) == 0);
    };
    l.check = [](const LawCase& t) {
      const Program whole = power(t.p(0), t.n(0) + t.n(1));
      const Program split = compose(power(t.p(0), t.n(0)), power(t.p(0), t.n(1)));
      if (t.n(0) >= 1 && t.n(1) >= 1) return whole == split;
      return equivalent(whole, split);
    };
  }
  {
    auto& l = reg.add("Loop_choice", LawGroup::loops,
                      "while C loop b end equiv U_i (C: b)^i \\ not C",
                      {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return equivalent(while_loop(t.c(0), t.p(0)), loop_choice_union(t.c(0), t.p(0)));
    };
  }
  {
    auto& l = reg.add("Repetition_fail", LawGroup::loops,
                      "p^i equiv Fail implies p^j equiv Fail for j >= i",
                      {K::program, K::nat, K::nat});
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      if (!equivalent(power(t.p(0), t.n(0)), f)) return true;
      return equivalent(power(t.p(0), t.n(0) + t.n(1)), f);
    };
  }
  {
    auto& l = reg.add("Loop_fail", LawGroup::loops,
                      "U_{1..n} p^i equiv Fail implies U_{1..m} p^i equiv Fail",
                      {K::program, K::nat, K::nat});
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      const std::size_t n = t.n(0) + 1, m = t.n(1) + 1;
      if (!equivalent(union_of_powers(t.p(0), 1, n), f)) return true;
      return equivalent(union_of_powers(t.p(0), 1, m), f);
    };
  }
  {
    auto& l = reg.add("Loop_range", LawGroup::loops,
                      "range(from a until C loop b end) <= C",
                      {K::program, K::condition, K::program});
    l.check = [](const LawCase& t) {
      return from_loop(t.p(0), t.c(0), t.p(1)).post().range().subset_of(t.c(0));
    };
  }
  {
    auto& l = reg.add("Loop_distrib", LawGroup::loops,
                      "disjoint feasible p, q: loop (p u q) end = loop p end u loop q end",
                      {K::program, K::program});
    l.side_condition = [](const LawCase& t) {
      return fsb(t.p(0)) && fsb(t.p(1)) &&
             (prog_range(t.p(0)) & t.p(1).pre()).is_empty() &&
             (prog_range(t.p(1)) & t.p(0).pre()).is_empty();
    };
    l.program_constraints = {{.feasible = true}, {.feasible = true}};
    l.check = [](const LawCase& t) {
      return arbitrary_rep(choice(t.p(0), t.p(1))) ==
             choice(arbitrary_rep(t.p(0)), arbitrary_rep(t.p(1)));
    };
  }
  {
    auto& l = reg.add("Loop_correct", LawGroup::loops,
                      "loop invariant I (range(post_a) <= I, I invariant of the "
                      "guarded body): range of the loop <= C n I",
                      {K::condition, K::program, K::condition, K::program});
    l.note =
        "is_loop_invariant demands I <= range(post_a); with that direction "
        "alone I = False is vacuously a loop invariant of any loop and the "
        "theorem fails. This premise needs the initialization to establish "
        "I, i.e. range(post_a) <= I. The discrepancy is recorded in the "
        "audit report.";
    l.side_condition = [](const LawCase& t) {
      return t.p(0).post().range().subset_of(t.c(0)) &&
             is_invariant(t.c(0), restrict(~t.c(1), t.p(1)));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      // Smallest invariant of the guarded body containing a's results.
      const Program body = restrict(~t.c(1), t.p(1));
      Condition i = t.p(0).post().range() | gen_condition(rng, t.space);
      for (;;) {
        const Condition next = i | image(body.post(), i & body.pre());
        if (next == i) break;
        i = next;
      }
      t.conditions[0] = i;
    };
    l.check = [](const LawCase& t) {
      const Program loop = from_loop(t.p(0), t.c(1), t.p(1));
      return prog_range(loop).subset_of(t.c(1) & t.c(0));
    };
  }
  {
    auto& l = reg.add("Loop_invinv", LawGroup::loops,
                      "a loop invariant of L is an invariant of L, of a, of the repetition",
                      {K::condition, K::program, K::condition, K::program});
    l.law_class = LawClass::audit;
    l.note =
        "The 'of a' clause does not follow from the definitions (a loop "
        "invariant constrains range(post_a), not a's step behaviour); the "
        "facets are measured separately.";
    l.side_condition = [](const LawCase& t) {
      return is_loop_invariant(t.c(0), t.p(0), t.c(1), t.p(1));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.conditions[0] =
          gen_invariant(rng, restrict(~t.c(1), t.p(1))) & t.p(0).post().range();
    };
    l.audit_check = [](const LawCase& t) {
      std::uint32_t bits = 0;
      const Program loop = from_loop(t.p(0), t.c(1), t.p(1));
      if (is_invariant(t.c(0), loop)) bits |= 1;
      if (is_invariant(t.c(0), t.p(0))) bits |= 2;
      if (is_invariant(t.c(0), arbitrary_rep(restrict(~t.c(1), t.p(1))))) bits |= 4;
      return bits;
    };
    l.facets = {"invariant of the loop", "invariant of the initialization a",
                "invariant of loop (not C): b end"};
  }
}

void add_invariant_laws(Registry& reg) {
  {
    auto& l = reg.add("Equiv_inv", LawGroup::invariants,
                      "I invariant of p and p equiv q imply I invariant of q",
                      {K::condition, K::program, K::program});
    l.side_condition = [](const LawCase& t) {
      return is_invariant(t.c(0), t.p(0)) && equivalent(t.p(0), t.p(1));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.conditions[0] = gen_invariant(rng, t.p(0));
      // An equivalent variant: the rounded version plus dead pairs.
      Relation extra = gen_relation(rng, t.space);
      extra = restrict_rel(extra, ~t.p(0).pre());
      t.programs[1] = make_program(
          t.space, t.p(0).pre(), restrict_rel(t.p(0).post(), t.p(0).pre()) | extra);
    };
    l.check = [](const LawCase& t) { return is_invariant(t.c(0), t.p(1)); };
  }
  {
    auto& l = reg.add("Inv_disjoint", LawGroup::invariants,
                      "any I disjoint from Pre_p is an invariant of p",
                      {K::condition, K::program});
    l.check = [](const LawCase& t) {
      return is_invariant(t.c(0) - t.p(0).pre(), t.p(0));
    };
  }
  {
    auto& l = reg.add("Inv_truefalse", LawGroup::invariants,
                      "True and False are invariants of every p", {K::program});
    l.check = [](const LawCase& t) {
      return is_invariant(Condition::all(t.space), t.p(0)) &&
             is_invariant(Condition::none(t.space), t.p(0));
    };
  }
  {
    auto& l = reg.add("Inv_subset", LawGroup::invariants,
                      "range(post_p) and range of p are invariants of p", {K::program});
    l.check = [](const LawCase& t) {
      return is_invariant(t.p(0).post().range(), t.p(0)) &&
             is_invariant(prog_range(t.p(0)), t.p(0));
    };
  }
  {
    auto& l = reg.add("Inv_inter", LawGroup::invariants,
                      "invariants I, J of p: I u J and I n J are invariants",
                      {K::condition, K::condition, K::program});
    l.side_condition = [](const LawCase& t) {
      return is_invariant(t.c(0), t.p(0)) && is_invariant(t.c(1), t.p(0));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.conditions[0] = gen_invariant(rng, t.p(0));
      t.conditions[1] = gen_invariant(rng, t.p(0));
    };
    l.check = [](const LawCase& t) {
      return is_invariant(t.c(0) | t.c(1), t.p(0)) &&
             is_invariant(t.c(0) & t.c(1), t.p(0));
    };
  }
  {
    auto& l = reg.add("Inv_special", LawGroup::invariants,
                      "I invariant of p, q spec p: I invariant of Pre_p: q",
                      {K::condition, K::program, K::program});
    l.side_condition = [](const LawCase& t) {
      return is_invariant(t.c(0), t.p(0)) && specializes(t.p(1), t.p(0));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.conditions[0] = gen_invariant(rng, t.p(0));
      t.programs[1] = gen_specialization(rng, t.p(0));
    };
    l.check = [](const LawCase& t) {
      return is_invariant(t.c(0), restrict(t.p(0).pre(), t.p(1)));
    };
  }
  {
    auto& l = reg.add("Inv_refines", LawGroup::invariants,
                      "I invariant of p, q spec p: I invariant of q",
                      {K::condition, K::program, K::program});
    l.note =
        "Under refinement the statement is false: refinement widens the "
        "precondition with arbitrary new behaviour and invariants do not "
        "survive it (counterexample in the audit report); asserted with "
        "specialization, matching its companion Inv_special.";
    l.side_condition = [](const LawCase& t) {
      return is_invariant(t.c(0), t.p(0)) && specializes(t.p(1), t.p(0));
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.conditions[0] = gen_invariant(rng, t.p(0));
      t.programs[1] = gen_specialization(rng, t.p(0));
    };
    l.check = [](const LawCase& t) { return is_invariant(t.c(0), t.p(1)); };
  }
  {
    auto& l = reg.add("Gen_inv", LawGroup::invariants,
                      "restriction, corestriction, choice, composition preserve invariants",
                      {K::condition, K::condition, K::program, K::program});
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      // Close a random set under the images of both operands.
      Condition i = gen_condition(rng, t.space);
      for (;;) {
        const Condition next = i | image(t.p(0).post(), i & t.p(0).pre()) |
                               image(t.p(1).post(), i & t.p(1).pre());
        if (next == i) break;
        i = next;
      }
      t.conditions[0] = i;
    };
    l.check = [](const LawCase& t) {
      const std::vector<Program> one = {t.p(0)};
      const std::vector<Program> two = {t.p(0), t.p(1)};
      const std::vector<Condition> guard = {t.c(1)};
      return invariant_preserving_check(InvOp::restrict_op, one, guard, t.c(0)) &&
             invariant_preserving_check(InvOp::corestrict_op, one, guard, t.c(0)) &&
             invariant_preserving_check(InvOp::choice_op, two, {}, t.c(0)) &&
             invariant_preserving_check(InvOp::compose_op, two, {}, t.c(0));
    };
  }
}

void add_contract_laws(Registry& reg) {
  {
    auto& l = reg.add("Rule_consequence", LawGroup::contracts_group,
                      "v correct for q, q correct for p: v correct for p",
                      {K::program, K::program, K::program});
    l.side_condition = [](const LawCase& t) {
      return correct_for(t.p(0), t.p(1).pre(), t.p(1).post()) &&
             correct_for(t.p(1), t.p(2).pre(), t.p(2).post());
    };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[1] = gen_refinement(rng, t.p(2));
      t.programs[0] = gen_refinement(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return correct_for(t.p(0), t.p(2).pre(), t.p(2).post());
    };
  }
  {
    auto& l = reg.add("Post_charac", LawGroup::contracts_group,
                      "q implements p: q sp Pre_p <= post_p", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return implements(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_refinement(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return sp(t.p(0), t.p(1).pre()).subset_of(t.p(1).post());
    };
  }
  {
    auto& l = reg.add("Pre_charac", LawGroup::contracts_group,
                      "q implements p: Pre_p <= q wp post_p", {K::program, K::program});
    l.side_condition = [](const LawCase& t) { return implements(t.p(0), t.p(1)); };
    l.targeted = [](LawCase& t, std::mt19937_64& rng) {
      t.programs[0] = gen_refinement(rng, t.p(1));
    };
    l.check = [](const LawCase& t) {
      return t.p(1).pre().subset_of(wp(t.p(0), t.p(1).post()));
    };
  }
  {
    auto& l = reg.add("Sp_false", LawGroup::contracts_group, "p sp False = False",
                      {K::program});
    l.check = [](const LawCase& t) {
      return sp(t.p(0), Condition::none(t.space)) == Relation::none(t.space);
    };
  }
  {
    auto& l = reg.add("Wp_false", LawGroup::contracts_group,
                      "p wp EmptyRel = False, for feasible p", {K::program});
    l.side_condition = [](const LawCase& t) { return fsb(t.p(0)); };
    l.program_constraints = {{.feasible = true}};
    l.check = [](const LawCase& t) {
      return wp(t.p(0), Relation::none(t.space)) == Condition::none(t.space);
    };
  }
  {
    auto& l = reg.add("Wp_infeas", LawGroup::contracts_group,
                      "p wp EmptyRel = Pre_p - dom(post_p)", {K::program});
    l.check = [](const LawCase& t) {
      return wp(t.p(0), Relation::none(t.space)) ==
             (t.p(0).pre() - t.p(0).post().domain());
    };
  }
  {
    auto& l = reg.add("Wp_fail", LawGroup::contracts_group, "Fail wp r = False",
                      {K::relation});
    l.check = [](const LawCase& t) {
      return wp(fail(t.space), t.r(0)) == Condition::none(t.space);
    };
  }
  {
    auto& l = reg.add("Sp_fail", LawGroup::contracts_group, "Fail sp C = False",
                      {K::condition});
    l.check = [](const LawCase& t) {
      return sp(fail(t.space), t.c(0)) == Relation::none(t.space);
    };
  }
  {
    auto& l = reg.add("Sp_true", LawGroup::contracts_group, "p sp True = post_p",
                      {K::program});
    l.check = [](const LawCase& t) {
      return sp(t.p(0), Condition::all(t.space)) == t.p(0).post();
    };
  }
  {
    auto& l = reg.add("Wp_true", LawGroup::contracts_group, "p wp FullRel = Pre_p",
                      {K::program});
    l.check = [](const LawCase& t) {
      return wp(t.p(0), Relation::universal(t.space)) == t.p(0).pre();
    };
  }
  {
    auto& l = reg.add("Sp_havoc", LawGroup::contracts_group,
                      "Havoc sp C = post(Havoc) / C", {K::condition});
    l.check = [](const LawCase& t) {
      return sp(havoc(t.space), t.c(0)) ==
             restrict_rel(Relation::universal(t.space), t.c(0));
    };
  }
  {
    auto& l = reg.add("Sp_distrib", LawGroup::contracts_group,
                      "p sp (C u D) = (p sp C) u (p sp D)",
                      {K::program, K::condition, K::condition});
    l.check = [](const LawCase& t) {
      return sp(t.p(0), t.c(0) | t.c(1)) == (sp(t.p(0), t.c(0)) | sp(t.p(0), t.c(1)));
    };
  }
  {
    auto& l = reg.add("Wp_distrib", LawGroup::contracts_group,
                      "p wp (r n t) = (p wp r) n (p wp t)",
                      {K::program, K::relation, K::relation});
    l.note =
        "With union on both sides this is false for the set-difference wp "
        "(counterexample in the audit report); the intersection form is "
        "the classical conjunctivity and holds.";
    l.check = [](const LawCase& t) {
      return wp(t.p(0), t.r(0) & t.r(1)) == (wp(t.p(0), t.r(0)) & wp(t.p(0), t.r(1)));
    };
  }
}

void add_concurrency_laws(Registry& reg) {
  {
    auto& l = reg.add("Atomic_commute", LawGroup::concurrency_group,
                      "p ||| q = q ||| p", {K::program, K::program});
    l.check = [](const LawCase& t) {
      return atomic_conc(t.p(0), t.p(1)) == atomic_conc(t.p(1), t.p(0));
    };
  }
  {
    auto& l = reg.add("Atomic_restrict", LawGroup::concurrency_group,
                      "C: (p ||| q) = (C: p) ||| (C: q)",
                      {K::condition, K::program, K::program});
    l.law_class = LawClass::audit;
    l.note =
        "As stated this contradicts Atomic_fail (restricting the second "
        "operand changes mid-run applicability); the variant that does "
        "hold restricts only the first step of each order: "
        "C: (p ||| q) = (C: p) ; q u (C: q) ; p.";
    l.facets = {"equality as displayed", "equivalence as displayed",
                "first-step variant C:(p|||q) = (C:p);q u (C:q);p"};
    l.audit_check = [](const LawCase& t) {
      const Program lhs = restrict(t.c(0), atomic_conc(t.p(0), t.p(1)));
      const Program rhs =
          atomic_conc(restrict(t.c(0), t.p(0)), restrict(t.c(0), t.p(1)));
      const Program variant = choice(compose(restrict(t.c(0), t.p(0)), t.p(1)),
                                     compose(restrict(t.c(0), t.p(1)), t.p(0)));
      std::uint32_t bits = 0;
      if (lhs == rhs) bits |= 1;
      if (equivalent(lhs, rhs)) bits |= 2;
      if (lhs == variant) bits |= 4;
      return bits;
    };
  }
  {
    auto& l = reg.add("Atomic_corestrict", LawGroup::concurrency_group,
                      "(p ||| q) \\ C = (p \\ C) ||| (q \\ C)",
                      {K::program, K::program, K::condition});
    l.law_class = LawClass::audit;
    l.note =
        "As stated this corestricts intermediate states too; the variant "
        "that does hold corestricts only the final step: "
        "(p ||| q) \\ C = p ; (q \\ C) u q ; (p \\ C).";
    l.facets = {"equality as displayed", "equivalence as displayed",
                "last-step variant (p|||q)\\C = p;(q\\C) u q;(p\\C)"};
    l.audit_check = [](const LawCase& t) {
      const Program lhs = corestrict(atomic_conc(t.p(0), t.p(1)), t.c(0));
      const Program rhs =
          atomic_conc(corestrict(t.p(0), t.c(0)), corestrict(t.p(1), t.c(0)));
      const Program variant = choice(compose(t.p(0), corestrict(t.p(1), t.c(0))),
                                     compose(t.p(1), corestrict(t.p(0), t.c(0))));
      std::uint32_t bits = 0;
      if (lhs == rhs) bits |= 1;
      if (equivalent(lhs, rhs)) bits |= 2;
      if (lhs == variant) bits |= 4;
      return bits;
    };
  }
  {
    auto& l = reg.add("Atomic_fail", LawGroup::concurrency_group,
                      "p ||| Fail = Fail ||| p = Fail", {K::program});
    l.check = [](const LawCase& t) {
      const Program f = fail(t.space);
      return atomic_conc(t.p(0), f) == f && atomic_conc(f, t.p(0)) == f;
    };
  }
  {
    auto& l = reg.add("Normal_form", LawGroup::concurrency_group,
                      "denote(to_cnf(e)) equiv denote(e)", {K::expr});
    l.expr_options = {.max_depth = 5, .max_atoms = 8, .core_only = false};
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      return equivalent(denote_cnf(to_cnf(t.e(0), env), env), denote(t.e(0), env));
    };
  }
  {
    auto& l = reg.add("Conc_sound", LawGroup::concurrency_group,
                      "every merged sum preserves per-operand order; operands fully interleave",
                      {K::expr, K::expr});
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      const ConcExpansion parts = conc_parts(t.e(0), t.e(1), env);
      const auto ids_of = [](const Cnf& c) {
        std::vector<std::vector<std::uint64_t>> sums;
        for (const auto& sum : c.sums) {
          std::vector<std::uint64_t> ids;
          for (const auto& atom : sum) ids.push_back(atom.id);
          sums.push_back(std::move(ids));
        }
        return sums;
      };
      const auto left_sums = ids_of(parts.left);
      const auto right_sums = ids_of(parts.right);
      const auto in_side = [](const std::vector<std::vector<std::uint64_t>>& side,
                              std::uint64_t id) {
        for (const auto& sum : side)
          for (const auto x : sum)
            if (x == id) return true;
        return false;
      };
      // Order preservation: in every merged sum, the subsequence of ids
      // belonging to one operand must be exactly one of its sums.
      for (const auto& sum : parts.merged.sums) {
        std::vector<std::uint64_t> from_left, from_right;
        for (const auto& atom : sum) {
          if (in_side(left_sums, atom.id))
            from_left.push_back(atom.id);
          else
            from_right.push_back(atom.id);
        }
        const auto is_one_of = [](const std::vector<std::vector<std::uint64_t>>& side,
                                  const std::vector<std::uint64_t>& seq) {
          for (const auto& sum : side)
            if (sum == seq) return true;
          return false;
        };
        if (!is_one_of(left_sums, from_left)) return false;
        if (!is_one_of(right_sums, from_right)) return false;
      }
      // Full interleaving across the result's sums.
      for (const auto& ls : left_sums)
        for (const auto u : ls)
          for (const auto& rs : right_sums)
            for (const auto x : rs)
              if (!interleaved(u, x, parts.merged)) return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Conc_soundpreserve", LawGroup::concurrency_group,
                      "occurs-before facts of each operand hold in p || q",
                      {K::expr, K::expr});
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      const ConcExpansion parts = conc_parts(t.e(0), t.e(1), env);
      if (parts.merged.sums.empty())
        return parts.left.sums.empty() || parts.right.sums.empty();
      const auto check_side = [&](const Cnf& side) {
        std::vector<std::uint64_t> ids;
        for (const auto& sum : side.sums)
          for (const auto& atom : sum) ids.push_back(atom.id);
        for (const auto u : ids)
          for (const auto v : ids)
            if (u != v && occurs_before(u, v, side) &&
                !occurs_before(u, v, parts.merged))
              return false;
        return true;
      };
      return check_side(parts.left) && check_side(parts.right);
    };
  }
  {
    auto& l = reg.add("Conc_soundinterleave", LawGroup::concurrency_group,
                      "every atom of p is interleaved with every atom of q in p || q",
                      {K::expr, K::expr});
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      const ConcExpansion parts = conc_parts(t.e(0), t.e(1), env);
      for (const auto& ls : parts.left.sums)
        for (const auto& la : ls)
          for (const auto& rs : parts.right.sums)
            for (const auto& ra : rs)
              if (!interleaved(la.id, ra.id, parts.merged)) return false;
      return true;
    };
  }
  {
    auto& l = reg.add("Conc_commute", LawGroup::concurrency_group,
                      "p || q = q || p", {K::expr, K::expr});
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      return denote_cnf(conc(t.e(0), t.e(1), env), env) ==
             denote_cnf(conc(t.e(1), t.e(0), env), env);
    };
  }
  {
    auto& l = reg.add("Conc_assoc", LawGroup::concurrency_group,
                      "(p || q) || u = p || (q || u)", {K::expr, K::expr, K::expr});
    l.law_class = LawClass::audit;
    l.expr_options = {.max_depth = 2, .max_atoms = 2, .core_only = true};
    l.sample_override = 300;
    l.note = "Measured at both equality and equivalence.";
    l.facets = {"equality", "equivalence"};
    l.audit_check = [](const LawCase& t) {
      const Environment& env = t.environment();
      const Program lhs =
          denote(exprs::conc(exprs::conc(t.e(0), t.e(1)), t.e(2)), env);
      const Program rhs =
          denote(exprs::conc(t.e(0), exprs::conc(t.e(1), t.e(2))), env);
      std::uint32_t bits = 0;
      if (lhs == rhs) bits |= 1;
      if (equivalent(lhs, rhs)) bits |= 2;
      return bits;
    };
  }
  {
    auto& l = reg.add("Conc_choicedistrib", LawGroup::concurrency_group,
                      "p || (q u u) = (p || q) u (p || u)", {K::expr, K::expr, K::expr});
    l.expr_options = {.max_depth = 2, .max_atoms = 2, .core_only = true};
    l.sample_override = 500;
    l.check = [](const LawCase& t) {
      const Environment& env = t.environment();
      const Program lhs = denote(exprs::conc(t.e(0), exprs::choice(t.e(1), t.e(2))), env);
      const Program rhs = denote(
          exprs::choice(exprs::conc(t.e(0), t.e(1)), exprs::conc(t.e(0), t.e(2))), env);
      return lhs == rhs;
    };
  }
  // The exchange laws: the subset symbol could denote either program
  // ordering, so each law measures both and the audit report records
  // which one holds.
  const auto add_exchange = [&reg](std::string id, std::string claim, std::size_t arity,
                                   auto build_sides) {
    auto& l = reg.add(std::move(id), LawGroup::concurrency_group, std::move(claim),
                      std::vector<K>(arity, K::expr));
    l.law_class = LawClass::audit;
    l.expr_options = {.max_depth = 2, .max_atoms = 2, .core_only = true};
    l.sample_override = 300;
    l.facets = {"as specialization", "as refinement"};
    l.audit_check = [build_sides](const LawCase& t) {
      const auto [lhs, rhs] = build_sides(t);
      std::uint32_t bits = 0;
      if (specializes(lhs, rhs)) bits |= 1;
      if (refines(lhs, rhs)) bits |= 2;
      return bits;
    };
  };
  add_exchange("Conc_composeleft", "(p || q) ; u <= p || (q ; u)", 3,
               [](const LawCase& t) {
                 const Environment& env = t.environment();
                 const Program lhs = compose(
                     denote(exprs::conc(t.e(0), t.e(1)), env), denote(t.e(2), env));
                 const Program rhs =
                     denote(exprs::conc(t.e(0), exprs::seq(t.e(1), t.e(2))), env);
                 return std::pair(lhs, rhs);
               });
  add_exchange("Conc_composeleftright", "q ; (p || u) <= p || (q ; u)", 3,
               [](const LawCase& t) {
                 const Environment& env = t.environment();
                 const Program lhs = compose(
                     denote(t.e(1), env), denote(exprs::conc(t.e(0), t.e(2)), env));
                 const Program rhs =
                     denote(exprs::conc(t.e(0), exprs::seq(t.e(1), t.e(2))), env);
                 return std::pair(lhs, rhs);
               });
  add_exchange("Conc_composeright", "p ; (q || u) <= (p ; q) || u", 3,
               [](const LawCase& t) {
                 const Environment& env = t.environment();
                 const Program lhs = compose(
                     denote(t.e(0), env), denote(exprs::conc(t.e(1), t.e(2)), env));
                 const Program rhs =
                     denote(exprs::conc(exprs::seq(t.e(0), t.e(1)), t.e(2)), env);
                 return std::pair(lhs, rhs);
               });
  add_exchange("Conc_composerightleft", "(p || u) ; q <= (p ; q) || u", 3,
               [](const LawCase& t) {
                 const Environment& env = t.environment();
                 const Program lhs = compose(
                     denote(exprs::conc(t.e(0), t.e(2)), env), denote(t.e(1), env));
                 const Program rhs =
                     denote(exprs::conc(exprs::seq(t.e(0), t.e(1)), t.e(2)), env);
                 return std::pair(lhs, rhs);
               });
  add_exchange("Conc_composegeneral", "(p || q) ; (u || v) <= (p ; u) || (q ; v)", 4,
               [](const LawCase& t) {
                 const Environment& env = t.environment();
                 const Program lhs =
                     compose(denote(exprs::conc(t.e(0), t.e(1)), env),
                             denote(exprs::conc(t.e(2), t.e(3)), env));
                 const Program rhs =
                     denote(exprs::conc(exprs::seq(t.e(0), t.e(2)),
                                        exprs::seq(t.e(1), t.e(3))), env);
                 return std::pair(lhs, rhs);
               });
}

std::vector<LawSpec> build_registry() {
  Registry reg;
  add_relation_laws(reg);
  add_core_laws(reg);
  add_restriction_laws(reg);
  add_corestriction_laws(reg);
  add_basic_program_laws(reg);
  add_choice_laws(reg);
  add_composition_laws(reg);
  add_preservation_laws(reg);
  add_refinement_laws(reg);
  add_conditional_laws(reg);
  add_loop_laws(reg);
  add_invariant_laws(reg);
  add_contract_laws(reg);
  add_concurrency_laws(reg);
  return reg.laws;
}

}  // namespace

const std::vector<LawSpec>& law_registry() {
  static const std::vector<LawSpec> registry = build_registry();
  return registry;
}

const LawSpec* find_law(const std::string& id) {
  for (const auto& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

}  // namespace prism
