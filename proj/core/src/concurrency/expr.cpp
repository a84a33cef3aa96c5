#include "prism/concurrency/expr.hpp"

#include <atomic>

#include "prism/concurrency/cnf.hpp"
#include "prism/error.hpp"

namespace prism {

bool Environment::has_program(const std::string& name) const {
  return programs.count(name) > 0 || name == "skip" || name == "fail" ||
         name == "havoc" || name == "infeasible";
}

bool Environment::has_condition(const std::string& name) const {
  return conditions.count(name) > 0;
}

Program Environment::resolve_program(const std::string& name) const {
  if (const auto it = programs.find(name); it != programs.end()) return it->second;
  if (name == "skip") return skip(space);
  if (name == "fail") return fail(space);
  if (name == "havoc") return havoc(space);
  if (name == "infeasible") return infeasible(space);
  throw usage_error("unknown program name '" + name + "'");
}

Condition Environment::resolve_condition(const std::string& name) const {
  if (const auto it = conditions.find(name); it != conditions.end()) return it->second;
  throw usage_error("unknown condition name '" + name + "'");
}

struct Expr::Node {
  ExprKind kind;
  std::string name;                  // basic_ref
  Program prog;                      // literal
  Condition cond;                    // restrict/corestrict/loops
  std::vector<Expr> children;
  std::vector<ExprBranch> branches;  // conditional
  std::size_t nat = 0;               // power
  std::uint64_t atom_id = 0;         // basic_ref/literal
};

namespace {

std::uint64_t next_atom_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

struct ExprFactory {
  using Node = Expr::Node;

  static Expr make(Node node) {
    Expr e;
    e.node_ = std::make_shared<const Node>(std::move(node));
    return e;
  }
};

using Node = ExprFactory::Node;

ExprKind Expr::kind() const { return node_->kind; }
const std::string& Expr::name() const { return node_->name; }
const Program& Expr::literal() const { return node_->prog; }
const Expr& Expr::child(std::size_t i) const { return node_->children[i]; }
std::size_t Expr::child_count() const { return node_->children.size(); }
const Condition& Expr::guard() const { return node_->cond; }
const std::vector<ExprBranch>& Expr::branches() const { return node_->branches; }
std::size_t Expr::exponent() const { return node_->nat; }
std::uint64_t Expr::atom_id() const { return node_->atom_id; }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.name != b.name || a.nat != b.nat) return false;
  if (a.kind == ExprKind::literal && a.prog != b.prog) return false;
  const bool has_cond = a.kind == ExprKind::restrict || a.kind == ExprKind::corestrict ||
                        a.kind == ExprKind::from_loop || a.kind == ExprKind::while_loop ||
                        a.kind == ExprKind::repeat_loop;
  if (has_cond && a.cond != b.cond) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i]) return false;
  if (a.branches.size() != b.branches.size()) return false;
  for (std::size_t i = 0; i < a.branches.size(); ++i)
    if (a.branches[i].guard != b.branches[i].guard ||
        a.branches[i].body != b.branches[i].body)
      return false;
  return true;
}

namespace exprs {

Expr basic_ref(std::string name) {
  Node n{.kind = ExprKind::basic_ref, .name = std::move(name)};
  n.atom_id = next_atom_id();
  return ExprFactory::make(std::move(n));
}

Expr literal(Program p) {
  Node n{.kind = ExprKind::literal, .prog = std::move(p)};
  n.atom_id = next_atom_id();
  return ExprFactory::make(std::move(n));
}

namespace {

Expr binary(ExprKind kind, Expr a, Expr b) {
  Node n{.kind = kind};
  n.children = {std::move(a), std::move(b)};
  return ExprFactory::make(std::move(n));
}

}  // namespace

Expr choice(Expr a, Expr b) { return binary(ExprKind::choice, std::move(a), std::move(b)); }
Expr demonic_choice(Expr a, Expr b) {
  return binary(ExprKind::demonic_choice, std::move(a), std::move(b));
}
Expr seq(Expr a, Expr b) { return binary(ExprKind::seq, std::move(a), std::move(b)); }
Expr conc(Expr a, Expr b) { return binary(ExprKind::conc, std::move(a), std::move(b)); }
Expr atomic_conc(Expr a, Expr b) {
  return binary(ExprKind::atomic_conc, std::move(a), std::move(b));
}

Expr restrict(Condition c, Expr e) {
  Node n{.kind = ExprKind::restrict, .cond = std::move(c)};
  n.children = {std::move(e)};
  return ExprFactory::make(std::move(n));
}

Expr corestrict(Expr e, Condition c) {
  Node n{.kind = ExprKind::corestrict, .cond = std::move(c)};
  n.children = {std::move(e)};
  return ExprFactory::make(std::move(n));
}

Expr conditional(std::vector<ExprBranch> branches, const StateSpace& space) {
  for (const auto& br : branches)
    require_same_space(br.guard.space(), space, "conditional branch");
  Node n{.kind = ExprKind::conditional};
  n.branches = std::move(branches);
  n.cond = Condition::none(space);  // keeps the space reachable for empty forms
  return ExprFactory::make(std::move(n));
}

Expr from_loop(Expr a, Condition c, Expr b) {
  Node n{.kind = ExprKind::from_loop, .cond = std::move(c)};
  n.children = {std::move(a), std::move(b)};
  return ExprFactory::make(std::move(n));
}

Expr while_loop(Condition c, Expr b) {
  Node n{.kind = ExprKind::while_loop, .cond = std::move(c)};
  n.children = {std::move(b)};
  return ExprFactory::make(std::move(n));
}

Expr repeat_loop(Expr b, Condition c) {
  Node n{.kind = ExprKind::repeat_loop, .cond = std::move(c)};
  n.children = {std::move(b)};
  return ExprFactory::make(std::move(n));
}

Expr power(Expr e, std::size_t n) {
  Node node{.kind = ExprKind::power, .nat = n};
  node.children = {std::move(e)};
  return ExprFactory::make(std::move(node));
}

Expr arbitrary_rep(Expr e) {
  Node n{.kind = ExprKind::arbitrary_rep};
  n.children = {std::move(e)};
  return ExprFactory::make(std::move(n));
}

}  // namespace exprs

Program atomic_conc(const Program& p, const Program& q) {
  require_same_space(p.space(), q.space(), "atomic concurrency");
  return choice(compose(p, q), compose(q, p));
}

Program denote(const Expr& e, const Environment& env) {
  switch (e.kind()) {
    case ExprKind::basic_ref:
      return env.resolve_program(e.name());
    case ExprKind::literal:
      require_same_space(e.literal().space(), env.space, "program literal");
      return e.literal();
    case ExprKind::choice:
      return choice(denote(e.child(0), env), denote(e.child(1), env));
    case ExprKind::demonic_choice:
      return choice(denote(e.child(0), env), denote(e.child(1), env),
                    ChoiceMode::demonic);
    case ExprKind::seq:
      return compose(denote(e.child(0), env), denote(e.child(1), env));
    case ExprKind::restrict:
      return restrict(e.guard(), denote(e.child(0), env));
    case ExprKind::corestrict:
      return corestrict(denote(e.child(0), env), e.guard());
    case ExprKind::conditional: {
      std::vector<Branch> branches;
      branches.reserve(e.branches().size());
      for (const auto& br : e.branches())
        branches.push_back({br.guard, denote(br.body, env)});
      return conditional(env.space, branches);
    }
    case ExprKind::from_loop:
      return from_loop(denote(e.child(0), env), e.guard(), denote(e.child(1), env));
    case ExprKind::while_loop:
      return while_loop(e.guard(), denote(e.child(0), env));
    case ExprKind::repeat_loop:
      return repeat_loop(denote(e.child(0), env), e.guard());
    case ExprKind::power:
      return power(denote(e.child(0), env), e.exponent());
    case ExprKind::arbitrary_rep:
      return arbitrary_rep(denote(e.child(0), env));
    case ExprKind::conc:
      return denote_cnf(conc(e.child(0), e.child(1), env), env);
    case ExprKind::atomic_conc:
      return atomic_conc(denote(e.child(0), env), denote(e.child(1), env));
  }
  throw usage_error("malformed expression node");
}

}  // namespace prism
