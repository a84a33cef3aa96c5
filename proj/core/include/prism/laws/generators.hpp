#pragma once

#include <optional>
#include <random>

#include "prism/concurrency/expr.hpp"

namespace prism {

/// All programs over a space, in canonical order: every (post, pre) pair
/// of subsets. 2^(n^2+n) programs; spaces larger than 2 states are
/// rejected (the count explodes), larger universes are sampled instead.
std::vector<Program> enumerate_programs(const StateSpace& space);

/// All 2^n conditions over a space (n <= 4).
std::vector<Condition> enumerate_conditions(const StateSpace& space);

/// All 2^(n^2) relations over a space (n <= 2).
std::vector<Relation> enumerate_relations(const StateSpace& space);

/// Constraints a generated program must satisfy, verified via classify()
/// after generation (repairs by trimming/rounding are allowed internally,
/// the outcome is always re-checked).
struct GenConstraints {
  std::optional<bool> feasible;
  std::optional<bool> rounded;
  bool pre_nonempty = false;
};

/// Deterministic pseudo-random program for (space, seed, constraints).
Program gen_program(const StateSpace& space, std::uint64_t seed,
                    const GenConstraints& constraints = {});

/// The same generator, driven by an existing engine (used by the law
/// suite, which owns one deterministic stream per law).
Program gen_program(std::mt19937_64& rng, const StateSpace& space,
                    const GenConstraints& constraints = {});

Condition gen_condition(std::mt19937_64& rng, const StateSpace& space);
Relation gen_relation(std::mt19937_64& rng, const StateSpace& space);

/// A sampling environment: the basis for random civilized expressions.
/// Declares `n_basics` pseudo-random programs named a, b, c, ...
Environment gen_environment(std::mt19937_64& rng, const StateSpace& space,
                            std::size_t n_basics);

struct GenExprOptions {
  std::size_t max_depth = 3;
  std::size_t max_atoms = 3;
  /// Restrict generation to the civilized core (basic references,
  /// literals, choice, sequence, restriction). When false, occasional
  /// corestriction/power nodes exercise the collapse-to-literal path.
  bool core_only = true;
};

/// Deterministic pseudo-random civilized expression over env's basis.
Expr gen_expr(std::mt19937_64& rng, const Environment& env, const GenExprOptions& opts);

/// Derives q that specializes p (used for targeted premise sampling).
Program gen_specialization(std::mt19937_64& rng, const Program& p);

/// Derives q that refines p.
Program gen_refinement(std::mt19937_64& rng, const Program& p);

/// Derives an invariant of p by closing a random seed set under p's image.
Condition gen_invariant(std::mt19937_64& rng, const Program& p);

}  // namespace prism
