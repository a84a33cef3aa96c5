#include "prism/concurrency/cnf.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "prism/error.hpp"
#include "prism/json_io.hpp"

namespace prism {

namespace {

CnfAtom guarded(CnfAtom atom, const Condition& c) {
  atom.guard = atom.guard ? (*atom.guard & c) : c;
  return atom;
}

void interleave(const CnfSum& s, std::size_t i, const CnfSum& t, std::size_t j,
                CnfSum& prefix, std::vector<CnfSum>& out) {
  if (i == s.size() && j == t.size()) {
    out.push_back(prefix);
    return;
  }
  if (i < s.size()) {
    prefix.push_back(s[i]);
    interleave(s, i + 1, t, j, prefix, out);
    prefix.pop_back();
  }
  if (j < t.size()) {
    prefix.push_back(t[j]);
    interleave(s, i, t, j + 1, prefix, out);
    prefix.pop_back();
  }
}

std::string set_text(const Condition& c, const char* sep) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : c.names()) {
    if (!first) out += sep;
    out += n;
    first = false;
  }
  return out + "}";
}

std::string atom_text(const CnfAtom& atom) {
  std::string body = atom.is_ref() ? atom.ref() : program_literal_text(atom.lit());
  if (atom.guard) return set_text(*atom.guard, ",") + ": " + body;
  return body;
}

std::string sum_text(const CnfSum& sum) {
  if (sum.empty()) return "fail";
  std::string out;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (i) out += " ; ";
    out += atom_text(sum[i]);
  }
  return out;
}

bool contains_id(const Cnf& c, std::uint64_t id) {
  for (const auto& sum : c.sums)
    for (const auto& atom : sum)
      if (atom.id == id) return true;
  return false;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > kMax / (n - k + i)) return kMax;
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

namespace {

void check_budget(std::size_t sums, std::uint64_t limit) {
  if (limit != 0 && sums > limit)
    throw usage_error("CNF expansion exceeds " + std::to_string(limit) + " sums");
}

Cnf to_cnf_impl(const Expr& e, const Environment& env, std::uint64_t limit);

ConcExpansion conc_parts_impl(const Expr& e1, const Expr& e2, const Environment& env,
                              std::uint64_t limit);

Cnf to_cnf_impl(const Expr& e, const Environment& env, std::uint64_t limit) {
  switch (e.kind()) {
    case ExprKind::basic_ref: {
      if (!env.has_program(e.name()))
        throw usage_error("unknown program name '" + e.name() + "'");
      CnfAtom atom{.guard = std::nullopt, .base = e.name(), .id = e.atom_id()};
      return Cnf{{{std::move(atom)}}};
    }
    case ExprKind::literal: {
      CnfAtom atom{.guard = std::nullopt, .base = e.literal(), .id = e.atom_id()};
      return Cnf{{{std::move(atom)}}};
    }
    case ExprKind::choice: {
      Cnf left = to_cnf_impl(e.child(0), env, limit);
      Cnf right = to_cnf_impl(e.child(1), env, limit);
      check_budget(left.sums.size() + right.sums.size(), limit);
      for (auto& sum : right.sums) left.sums.push_back(std::move(sum));
      return left;
    }
    case ExprKind::seq: {
      const Cnf left = to_cnf_impl(e.child(0), env, limit);
      const Cnf right = to_cnf_impl(e.child(1), env, limit);
      check_budget(left.sums.size() * right.sums.size(), limit);
      Cnf out;
      out.sums.reserve(left.sums.size() * right.sums.size());
      for (const auto& ls : left.sums)
        for (const auto& rs : right.sums) {
          CnfSum sum = ls;
          sum.insert(sum.end(), rs.begin(), rs.end());
          out.sums.push_back(std::move(sum));
        }
      return out;
    }
    case ExprKind::restrict: {
      Cnf inner = to_cnf_impl(e.child(0), env, limit);
      for (auto& sum : inner.sums) {
        if (sum.empty()) continue;  // an empty sum is Fail; restriction keeps it Fail
        sum.front() = guarded(std::move(sum.front()), e.guard());
      }
      return inner;
    }
    case ExprKind::conc:
      return conc_parts_impl(e.child(0), e.child(1), env, limit).merged;
    default: {
      // Any other construct is kept atomic: it denotes a program and
      // enters the normal form as one opaque basic step.
      CnfAtom atom{.guard = std::nullopt, .base = denote(e, env), .id = e.atom_id()};
      return Cnf{{{std::move(atom)}}};
    }
  }
}

ConcExpansion conc_parts_impl(const Expr& e1, const Expr& e2, const Environment& env,
                              std::uint64_t limit) {
  ConcExpansion expansion;
  expansion.left = to_cnf_impl(e1, env, limit);
  expansion.right = to_cnf_impl(e2, env, limit);
  check_budget(conc_sum_count(expansion.left, expansion.right), limit);
  for (const auto& ls : expansion.left.sums)
    for (const auto& rs : expansion.right.sums) {
      auto merged = merge_sums(ls, rs);
      for (auto& sum : merged) expansion.merged.sums.push_back(std::move(sum));
    }
  return expansion;
}

}  // namespace

Cnf to_cnf(const Expr& e, const Environment& env) { return to_cnf_impl(e, env, 0); }

Cnf to_cnf_limited(const Expr& e, const Environment& env, std::uint64_t max_sums) {
  return to_cnf_impl(e, env, max_sums);
}

std::vector<CnfSum> merge_sums(const CnfSum& s, const CnfSum& t) {
  std::vector<CnfSum> out;
  out.reserve(static_cast<std::size_t>(
      std::min<std::uint64_t>(binomial_saturating(s.size() + t.size(), s.size()), 1 << 20)));
  CnfSum prefix;
  prefix.reserve(s.size() + t.size());
  interleave(s, 0, t, 0, prefix, out);
  return out;
}

Cnf conc(const Expr& e1, const Expr& e2, const Environment& env) {
  return conc_parts_impl(e1, e2, env, 0).merged;
}

ConcExpansion conc_parts(const Expr& e1, const Expr& e2, const Environment& env) {
  return conc_parts_impl(e1, e2, env, 0);
}

std::uint64_t conc_sum_count(const Cnf& a, const Cnf& b) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t total = 0;
  for (const auto& s : a.sums)
    for (const auto& t : b.sums) {
      const std::uint64_t c = binomial_saturating(s.size() + t.size(), s.size());
      if (total > kMax - c) return kMax;
      total += c;
    }
  return total;
}

Program denote_cnf(const Cnf& c, const Environment& env) {
  Program result = fail(env.space);
  for (const auto& sum : c.sums) {
    Program path = sum.empty() ? fail(env.space) : skip(env.space);
    bool first = true;
    for (const auto& atom : sum) {
      Program step = atom.is_ref() ? env.resolve_program(atom.ref()) : atom.lit();
      if (atom.guard) step = restrict(*atom.guard, step);
      path = first ? step : compose(path, step);
      first = false;
    }
    result = choice(result, path);
  }
  return result;
}

bool occurs_before(std::uint64_t u, std::uint64_t v, const Cnf& c) {
  if (!contains_id(c, u)) throw usage_error("unknown atom id in occurs_before");
  if (!contains_id(c, v)) throw usage_error("unknown atom id in occurs_before");
  for (const auto& sum : c.sums) {
    std::ptrdiff_t u_at = -1, v_at = -1;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      if (sum[i].id == u && u_at < 0) u_at = static_cast<std::ptrdiff_t>(i);
      if (sum[i].id == v) v_at = static_cast<std::ptrdiff_t>(i);
    }
    if (u_at >= 0 && v_at > u_at) return true;
  }
  return false;
}

bool interleaved(std::uint64_t u, std::uint64_t x, const Cnf& c) {
  return occurs_before(u, x, c) && occurs_before(x, u, c);
}

std::string print_cnf(const Cnf& c) {
  std::vector<std::string> lines;
  lines.reserve(c.sums.size());
  for (const auto& sum : c.sums) lines.push_back(sum_text(sum));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string cnf_to_json(const Cnf& c) {
  using ordered_json = nlohmann::ordered_json;
  std::vector<std::string> keys;
  std::vector<ordered_json> rendered;
  for (const auto& sum : c.sums) {
    ordered_json jsum = ordered_json::array();
    for (const auto& atom : sum) {
      ordered_json jatom;
      if (atom.guard) {
        ordered_json guard = ordered_json::array();
        for (const auto& n : atom.guard->names()) guard.push_back(n);
        jatom["guard"] = guard;
      } else {
        jatom["guard"] = nullptr;
      }
      if (atom.is_ref())
        jatom["basic"] = atom.ref();
      else
        jatom["basic"] = ordered_json::parse(to_json(atom.lit()));
      jsum.push_back(jatom);
    }
    keys.push_back(sum_text(sum));
    rendered.push_back(std::move(jsum));
  }
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  ordered_json out = ordered_json::array();
  std::string last;
  bool have_last = false;
  for (const std::size_t i : order) {
    if (have_last && keys[i] == last) continue;
    out.push_back(rendered[i]);
    last = keys[i];
    have_last = true;
  }
  return out.dump();
}

namespace {

bool is_guarded_atom(const Expr& e) {
  if (e.kind() == ExprKind::basic_ref || e.kind() == ExprKind::literal) return true;
  return e.kind() == ExprKind::restrict && is_guarded_atom(e.child(0));
}

// Flattens a sum (a sequence of guarded atoms) into its steps, pushing
// restrictions inward with the restriction equalities where needed.
bool flatten_sum(const Expr& e, std::vector<Expr>& out) {
  if (is_guarded_atom(e)) {
    out.push_back(e);
    return true;
  }
  if (e.kind() == ExprKind::seq)
    return flatten_sum(e.child(0), out) && flatten_sum(e.child(1), out);
  if (e.kind() == ExprKind::restrict) {
    const Expr& inner = e.child(0);
    if (inner.kind() == ExprKind::seq)  // C: (u ; v) = (C: u) ; v
      return flatten_sum(exprs::seq(exprs::restrict(e.guard(), inner.child(0)),
                                    inner.child(1)),
                         out);
    if (inner.kind() == ExprKind::restrict)  // C: (D: x) = (C n D): x
      return flatten_sum(exprs::restrict(e.guard() & inner.guard(), inner.child(0)),
                         out);
  }
  return false;
}

Program conc_rule_order(std::vector<Expr> left, std::vector<Expr> right,
                        const Environment& env);

Program conc_rule_order(const Expr& p, const Expr& q, const Environment& env) {
  // Rule 1: both basic, possibly with a restriction.
  if (is_guarded_atom(p) && is_guarded_atom(q))
    return atomic_conc(denote(p, env), denote(q, env));
  // Rule 2: remove one restriction wrapped around a composite operand.
  const auto unwrap = [&](const Expr& e) -> std::optional<Expr> {
    if (e.kind() != ExprKind::restrict || is_guarded_atom(e)) return std::nullopt;
    const Condition& c = e.guard();
    const Expr& inner = e.child(0);
    switch (inner.kind()) {
      case ExprKind::restrict:  // C: (D: x) = (C n D): x
        return exprs::restrict(c & inner.guard(), inner.child(0));
      case ExprKind::choice:  // C: (u U v) = C: u U C: v
        return exprs::choice(exprs::restrict(c, inner.child(0)),
                             exprs::restrict(c, inner.child(1)));
      case ExprKind::seq:  // C: (u ; v) = (C: u) ; v
        return exprs::seq(exprs::restrict(c, inner.child(0)), inner.child(1));
      default:
        return std::nullopt;
    }
  };
  if (const auto p2 = unwrap(p)) return conc_rule_order(*p2, q, env);
  if (const auto q2 = unwrap(q)) return conc_rule_order(p, *q2, env);
  // Rule 3: distribute over choice.
  if (p.kind() == ExprKind::choice)
    return choice(conc_rule_order(p.child(0), q, env),
                  conc_rule_order(p.child(1), q, env));
  if (q.kind() == ExprKind::choice)
    return choice(conc_rule_order(p, q.child(0), env),
                  conc_rule_order(p, q.child(1), env));
  // Rule 4: both operands are sums.
  std::vector<Expr> s, t;
  if (!flatten_sum(p, s) || !flatten_sum(q, t))
    throw usage_error("rule-order expansion needs operands in the civilized core");
  return conc_rule_order(std::move(s), std::move(t), env);
}

// An exhausted side leaves the other side to run sequentially. (The
// empty sum denotes Fail only as a standalone path; inside the merge
// recursion it acts as the neutral continuation — interleaving a single
// atom against a pair must yield all three orders.)
Program denote_sum_steps(const std::vector<Expr>& steps, const Environment& env) {
  if (steps.empty()) return fail(env.space);
  Program out = denote(steps[0], env);
  for (std::size_t i = 1; i < steps.size(); ++i) out = compose(out, denote(steps[i], env));
  return out;
}

Program conc_rule_order(std::vector<Expr> left, std::vector<Expr> right,
                        const Environment& env) {
  if (left.empty()) return denote_sum_steps(right, env);
  if (right.empty()) return denote_sum_steps(left, env);
  if (left.size() == 1 && right.size() == 1)
    return atomic_conc(denote(left[0], env), denote(right[0], env));
  const std::vector<Expr> left_rest(left.begin() + 1, left.end());
  const std::vector<Expr> right_rest(right.begin() + 1, right.end());
  const Program via_left =
      compose(denote(left[0], env), conc_rule_order(left_rest, right, env));
  const Program via_right =
      compose(denote(right[0], env), conc_rule_order(left, right_rest, env));
  return choice(via_left, via_right);
}

}  // namespace

Program conc_by_rule_order(const Expr& e1, const Expr& e2, const Environment& env) {
  return conc_rule_order(e1, e2, env);
}

std::string program_literal_text(const Program& p) {
  std::string out = "prog(pre: " + set_text(p.pre(), ", ") + ", post: {";
  bool first = true;
  for (const auto& [a, b] : p.post().pairs()) {
    if (!first) out += ", ";
    out += a + " -> " + b;
    first = false;
  }
  return out + "})";
}

}  // namespace prism
