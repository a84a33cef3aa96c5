#include "prism/laws/generators.hpp"

#include "prism/error.hpp"

namespace prism {

namespace {

Bitset bits_from_mask(std::size_t nbits, std::uint64_t mask) {
  Bitset b(nbits);
  for (std::size_t i = 0; i < nbits; ++i)
    if ((mask >> i) & 1u) b.set(i);
  return b;
}

Bitset random_bits(std::mt19937_64& rng, std::size_t nbits) {
  Bitset b(nbits);
  for (std::size_t i = 0; i < nbits; ++i)
    if (rng() & 1u) b.set(i);
  return b;
}

}  // namespace

std::vector<Program> enumerate_programs(const StateSpace& space) {
  const std::size_t n = space.size();
  if (n > 2) throw usage_error("exhaustive enumeration is limited to 2 states");
  std::vector<Program> out;
  out.reserve(std::size_t{1} << (n * n + n));
  for (std::uint64_t post = 0; post < (std::uint64_t{1} << (n * n)); ++post)
    for (std::uint64_t pre = 0; pre < (std::uint64_t{1} << n); ++pre)
      out.push_back(make_program(space, Condition::from_bits(space, bits_from_mask(n, pre)),
                                 Relation::from_bits(space, bits_from_mask(n * n, post))));
  return out;
}

std::vector<Condition> enumerate_conditions(const StateSpace& space) {
  const std::size_t n = space.size();
  if (n > 4) throw usage_error("condition enumeration is limited to 4 states");
  std::vector<Condition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    out.push_back(Condition::from_bits(space, bits_from_mask(n, mask)));
  return out;
}

std::vector<Relation> enumerate_relations(const StateSpace& space) {
  const std::size_t n = space.size();
  if (n > 2) throw usage_error("relation enumeration is limited to 2 states");
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask)
    out.push_back(Relation::from_bits(space, bits_from_mask(n * n, mask)));
  return out;
}

Program gen_program(const StateSpace& space, std::uint64_t seed,
                    const GenConstraints& constraints) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + space.size());
  return gen_program(rng, space, constraints);
}

Program gen_program(std::mt19937_64& rng, const StateSpace& space,
                    const GenConstraints& constraints) {
  const std::size_t n = space.size();
  if (constraints.pre_nonempty && n == 0)
    throw usage_error("cannot generate a nonempty precondition over an empty space");
  for (int attempt = 0; attempt < 512; ++attempt) {
    Bitset post = random_bits(rng, n * n);
    Bitset pre = random_bits(rng, n);
    Relation rel = Relation::from_bits(space, std::move(post));
    Condition cond = Condition::from_bits(space, std::move(pre));
    // Repair toward the constraints, then re-check honestly.
    if (constraints.feasible.value_or(false)) cond = cond & rel.domain();
    if (constraints.rounded.value_or(false)) rel = restrict_rel(rel, cond);
    if (constraints.pre_nonempty && cond.is_empty()) continue;
    Program p = make_program(space, cond, rel);
    const auto c = classify(p);
    if (constraints.feasible && c.feasible != *constraints.feasible) continue;
    if (constraints.rounded && c.rounded != *constraints.rounded) continue;
    return p;
  }
  throw usage_error("could not generate a program meeting the constraints");
}

Condition gen_condition(std::mt19937_64& rng, const StateSpace& space) {
  return Condition::from_bits(space, random_bits(rng, space.size()));
}

Relation gen_relation(std::mt19937_64& rng, const StateSpace& space) {
  return Relation::from_bits(space, random_bits(rng, space.size() * space.size()));
}

Environment gen_environment(std::mt19937_64& rng, const StateSpace& space,
                            std::size_t n_basics) {
  Environment env;
  env.space = space;
  for (std::size_t i = 0; i < n_basics; ++i) {
    const std::string name(1, static_cast<char>('a' + i));
    GenConstraints constraints;
    if (rng() % 2 == 0) constraints.feasible = true;
    if (rng() % 2 == 0) constraints.rounded = true;
    env.programs.emplace(name, gen_program(rng, space, constraints));
  }
  return env;
}

namespace {

Expr gen_atom(std::mt19937_64& rng, const Environment& env) {
  // Mostly named basis programs; occasionally a literal or skip/fail.
  const std::size_t roll = rng() % 10;
  if (roll < 6 && !env.programs.empty()) {
    auto it = env.programs.begin();
    std::advance(it, rng() % env.programs.size());
    return exprs::basic_ref(it->first);
  }
  if (roll < 8) return exprs::literal(gen_program(rng, env.space, {}));
  return exprs::basic_ref(roll == 8 ? "skip" : "fail");
}

Expr gen_expr_impl(std::mt19937_64& rng, const Environment& env,
                   const GenExprOptions& opts, std::size_t depth, std::size_t& atoms) {
  if (depth >= opts.max_depth || atoms + 1 >= opts.max_atoms) {
    ++atoms;
    return gen_atom(rng, env);
  }
  const std::size_t roll = rng() % 12;
  if (roll < 3) {
    ++atoms;
    return gen_atom(rng, env);
  }
  if (roll < 6) {
    Expr a = gen_expr_impl(rng, env, opts, depth + 1, atoms);
    Expr b = gen_expr_impl(rng, env, opts, depth + 1, atoms);
    return exprs::choice(std::move(a), std::move(b));
  }
  if (roll < 9) {
    Expr a = gen_expr_impl(rng, env, opts, depth + 1, atoms);
    Expr b = gen_expr_impl(rng, env, opts, depth + 1, atoms);
    return exprs::seq(std::move(a), std::move(b));
  }
  if (roll < 11 || opts.core_only)
    return exprs::restrict(gen_condition(rng, env.space),
                           gen_expr_impl(rng, env, opts, depth + 1, atoms));
  // Non-core node: collapses to one opaque atom in CNF.
  if (rng() % 2 == 0)
    return exprs::corestrict(gen_expr_impl(rng, env, opts, depth + 1, atoms),
                             gen_condition(rng, env.space));
  return exprs::power(gen_expr_impl(rng, env, opts, depth + 1, atoms), rng() % 3);
}

}  // namespace

Expr gen_expr(std::mt19937_64& rng, const Environment& env, const GenExprOptions& opts) {
  std::size_t atoms = 0;
  return gen_expr_impl(rng, env, opts, 0, atoms);
}

Program gen_specialization(std::mt19937_64& rng, const Program& p) {
  const StateSpace& space = p.space();
  const std::size_t n = space.size();
  // Shrink the precondition, keep post pairs only where they agree with p
  // inside it, and allow arbitrary extra pairs starting outside Pre_p.
  Condition pre = p.pre() & gen_condition(rng, space);
  Bitset post(n * n);
  p.post().bits().for_each_set([&](std::size_t i) {
    if (pre.contains(i / n) && (rng() & 1u)) post.set(i);
  });
  const Bitset noise = random_bits(rng, n * n);
  noise.for_each_set([&](std::size_t i) {
    if (!p.pre().contains(i / n)) post.set(i);
  });
  return make_program(space, pre, Relation::from_bits(space, std::move(post)));
}

Program gen_refinement(std::mt19937_64& rng, const Program& p) {
  const StateSpace& space = p.space();
  const std::size_t n = space.size();
  // Widen the precondition; inside Pre_p keep a subset of p's pairs, and
  // behave arbitrarily on the new states.
  Condition pre = p.pre() | gen_condition(rng, space);
  Bitset post(n * n);
  p.post().bits().for_each_set([&](std::size_t i) {
    if (rng() & 1u) post.set(i);
  });
  const Bitset noise = random_bits(rng, n * n);
  noise.for_each_set([&](std::size_t i) {
    if (!p.pre().contains(i / n)) post.set(i);
  });
  return make_program(space, pre, Relation::from_bits(space, std::move(post)));
}

Condition gen_invariant(std::mt19937_64& rng, const Program& p) {
  Condition i = gen_condition(rng, p.space());
  for (;;) {
    const Condition next = i | image(p.post(), i & p.pre());
    if (next == i) return i;
    i = next;
  }
}

}  // namespace prism
