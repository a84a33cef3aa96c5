#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prism/constructs.hpp"

namespace prism {

/// Name bindings for civilized expressions: the basis B of basic
/// programs, plus named conditions. "skip", "fail", "havoc" and
/// "infeasible" always resolve, whether or not they were declared.
struct Environment {
  StateSpace space;
  std::map<std::string, Condition> conditions;
  std::map<std::string, Program> programs;

  bool has_program(const std::string& name) const;
  bool has_condition(const std::string& name) const;
  Program resolve_program(const std::string& name) const;
  Condition resolve_condition(const std::string& name) const;
};

enum class ExprKind {
  basic_ref,
  literal,
  choice,
  demonic_choice,
  seq,
  restrict,
  corestrict,
  conditional,
  from_loop,
  while_loop,
  repeat_loop,
  power,
  arbitrary_rep,
  conc,
  atomic_conc,
};

struct ExprBranch;

/// A civilized program expression. Nodes are immutable and shared;
/// copying an Expr is cheap. Every basic_ref/literal occurrence carries a
/// distinct atom identity assigned at build time, so interleaving
/// analysis can tell apart duplicate uses of one basic program.
class Expr {
 public:
  Expr() = default;

  ExprKind kind() const;

  const std::string& name() const;               // basic_ref
  const Program& literal() const;                // literal
  const Expr& child(std::size_t i) const;        // operands, in order
  std::size_t child_count() const;
  const Condition& guard() const;                // restrict / corestrict / loops
  const std::vector<ExprBranch>& branches() const;  // conditional
  std::size_t exponent() const;                  // power
  std::uint64_t atom_id() const;                 // basic_ref / literal

  /// Structural equality; atom identities are not part of the structure.
  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

  explicit operator bool() const { return node_ != nullptr; }

 private:
  friend struct ExprFactory;
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct ExprBranch {
  Condition guard;
  Expr body;
};

namespace exprs {

Expr basic_ref(std::string name);
Expr literal(Program p);
Expr choice(Expr a, Expr b);
Expr demonic_choice(Expr a, Expr b);
Expr seq(Expr a, Expr b);
Expr restrict(Condition c, Expr e);
Expr corestrict(Expr e, Condition c);
Expr conditional(std::vector<ExprBranch> branches, const StateSpace& space);
Expr from_loop(Expr a, Condition c, Expr b);
Expr while_loop(Condition c, Expr b);
Expr repeat_loop(Expr b, Condition c);
Expr power(Expr e, std::size_t n);
Expr arbitrary_rep(Expr e);
Expr conc(Expr a, Expr b);
Expr atomic_conc(Expr a, Expr b);

}  // namespace exprs

/// p ||| q = (p ; q) U (q ; p).
Program atomic_conc(const Program& p, const Program& q);

/// Evaluates an expression to the program it denotes.
Program denote(const Expr& e, const Environment& env);

}  // namespace prism
