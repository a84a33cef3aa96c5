#pragma once

#include <optional>
#include <variant>

#include "prism/concurrency/expr.hpp"

namespace prism {

/// One guarded basic step of an execution path: a basic program (by name
/// or as a literal), possibly under a restriction. The id keeps the
/// identity of the originating expression atom.
struct CnfAtom {
  std::optional<Condition> guard;
  std::variant<std::string, Program> base;
  std::uint64_t id = 0;

  bool is_ref() const { return base.index() == 0; }
  const std::string& ref() const { return std::get<0>(base); }
  const Program& lit() const { return std::get<1>(base); }
};

/// A sum: a sequential composition of atoms. An empty sum denotes Fail.
using CnfSum = std::vector<CnfAtom>;

/// Choice Normal Form: a choice over sums -- the set of execution paths
/// of a civilized program. An empty form (no sums) is the empty choice,
/// Fail.
struct Cnf {
  std::vector<CnfSum> sums;
};

/// Converts a civilized expression to CNF. The civilized core (basic
/// references, literals, choice, sequence, restriction) is translated
/// structurally: choice concatenates the operand forms, sequence
/// concatenates every pair of sums, and a restriction lands on the first
/// atom of every sum (nested guards intersect). Concurrency nodes expand
/// through conc(). Every other node keeps its granularity: it collapses
/// into a single literal atom via denote().
///
/// Guarantee (checked by the law suite): denote_cnf(to_cnf(e)) is
/// equivalent to denote(e).
Cnf to_cnf(const Expr& e, const Environment& env);

/// to_cnf with a size budget: throws usage_error as soon as an
/// intermediate form exceeds `max_sums` sums.
Cnf to_cnf_limited(const Expr& e, const Environment& env, std::uint64_t max_sums);

/// Fine-grained concurrency e1 || e2: both operands are brought to CNF
/// and every sum of one is interleaved with every sum of the other,
/// preserving the internal order of each side. Atom identities survive
/// into the result.
Cnf conc(const Expr& e1, const Expr& e2, const Environment& env);

/// conc() together with the two operand forms it interleaved, for
/// order/interleaving analysis.
struct ConcExpansion {
  Cnf left;
  Cnf right;
  Cnf merged;
};
ConcExpansion conc_parts(const Expr& e1, const Expr& e2, const Environment& env);

/// All order-preserving interleavings of two sums.
std::vector<CnfSum> merge_sums(const CnfSum& s, const CnfSum& t);

/// Number of sums conc would produce, saturating at 2^64-1. Lets callers
/// refuse oversized expansions before doing the work.
std::uint64_t conc_sum_count(const Cnf& a, const Cnf& b);

/// The program a CNF denotes: choice over the sums, each sum a
/// composition of its (possibly guarded) atoms.
Program denote_cnf(const Cnf& c, const Environment& env);

/// u occurs before v: some sum contains u at a lower index than v.
/// Unknown atom ids are a usage error.
bool occurs_before(std::uint64_t u, std::uint64_t v, const Cnf& c);

/// u and x are interleaved: each occurs before the other (in possibly
/// different sums).
bool interleaved(std::uint64_t u, std::uint64_t x, const Cnf& c);

/// Canonical text: one sum per line, atoms joined by " ; ", guards
/// printed as "{a,b}: name", lines sorted and deduplicated.
std::string print_cnf(const Cnf& c);

/// JSON mirror of the text form.
std::string cnf_to_json(const Cnf& c);

/// The DSL literal form of a program, e.g. "prog(pre: {a}, post: {a -> b})".
std::string program_literal_text(const Program& p);

/// Evaluates e1 || e2 by applying the concurrency rewrite rules in their
/// stated order (atomic case, restriction removal, choice distribution,
/// sum interleaving) directly on the expression trees, without the
/// CNF-first normalization. The audit suite compares this against
/// denote_cnf(conc(...)). Operands must be in the civilized core.
Program conc_by_rule_order(const Expr& e1, const Expr& e2, const Environment& env);

}  // namespace prism
