#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <memory>

#include "prism/laws/generators.hpp"

namespace prism {

enum class LawGroup {
  relations,
  core,
  basic_programs,
  restriction,
  corestriction,
  choice_ops,
  composition,
  rounding,
  feasibility,
  refinement_group,
  conditionals,
  loops,
  invariants,
  contracts_group,
  concurrency_group,
};

const char* to_string(LawGroup g);

/// asserted: a failure fails the suite.
/// audit: never fails the suite; the checker measures which facets of a
/// contentious statement hold and reports them with counterexamples.
enum class LawClass { asserted, audit };

enum class OperandKind { program, condition, relation, nat, expr };

/// One quantified operand tuple. Expression laws also carry the sampling
/// environment their basic references resolve in.
struct LawCase {
  StateSpace space;
  std::vector<Program> programs;
  std::vector<Condition> conditions;
  std::vector<Relation> relations;
  std::vector<std::size_t> nats;
  std::vector<Expr> exprs;
  std::shared_ptr<const Environment> env;

  const Program& p(std::size_t i) const { return programs[i]; }
  const Condition& c(std::size_t i) const { return conditions[i]; }
  const Relation& r(std::size_t i) const { return relations[i]; }
  std::size_t n(std::size_t i) const { return nats[i]; }
  const Expr& e(std::size_t i) const { return exprs[i]; }
  const Environment& environment() const { return *env; }
};

/// One registered theorem. `check` decides a single case; for audit-class
/// laws, `audit_check` instead returns the bitmask of `facets` that hold
/// for the case.
struct LawSpec {
  std::string id;
  LawGroup group = LawGroup::core;
  LawClass law_class = LawClass::asserted;
  std::string claim;
  std::string note;  // side-condition provenance and encoding decisions
  std::vector<OperandKind> signature;
  std::size_t max_nat = 4;

  std::function<bool(const LawCase&)> side_condition;  // optional filter
  std::function<bool(const LawCase&)> check;
  std::vector<std::string> facets;
  std::function<std::uint32_t(const LawCase&)> audit_check;

  /// Optional targeted sampling hook: rewrites a freshly drawn random
  /// case so that a rare premise (q specializes p, I invariant of p, ...)
  /// actually holds; the side condition is still verified afterwards.
  std::function<void(LawCase&, std::mt19937_64&)> targeted;

  /// Per-program-operand generation constraints for sampled universes.
  std::vector<GenConstraints> program_constraints;

  /// Shape of sampled expressions for expression laws.
  GenExprOptions expr_options;

  /// Overrides the suite's sample count (used by the heavier expression
  /// expansions).
  std::optional<std::size_t> sample_override;

  std::size_t program_arity() const {
    std::size_t k = 0;
    for (const auto op : signature) k += op == OperandKind::program;
    return k;
  }
  bool has_exprs() const {
    for (const auto op : signature)
      if (op == OperandKind::expr) return true;
    return false;
  }
};

/// The full registry of named laws; the manifest test pins the exact id
/// set.
const std::vector<LawSpec>& law_registry();

/// Lookup by id; null when unknown.
const LawSpec* find_law(const std::string& id);

}  // namespace prism
