#include "prism/constructs.hpp"

#include <unordered_set>

#include "prism/error.hpp"

namespace prism {

Program conditional(const StateSpace& space, std::span<const Branch> branches) {
  // The union of the restricted branches. A one-branch conditional is
  // exactly the restriction; the empty choice is Fail.
  if (branches.empty()) return fail(space);
  Program result = restrict(branches.front().guard, branches.front().body);
  for (const auto& branch : branches.subspan(1))
    result = choice(result, restrict(branch.guard, branch.body));
  return result;
}

Program if_then_else(const Condition& c, const Program& p, const Program& q) {
  const Branch branches[] = {{c, p}, {~c, q}};
  return conditional(p.space(), branches);
}

Program if_then(const Condition& c, const Program& p) {
  return if_then_else(c, p, skip(p.space()));
}

Program power(const Program& p, std::size_t n) {
  if (n == 0) return basic(p.space(), BasicKind::skip, p.pre());
  Program result = p;
  for (std::size_t i = 1; i < n; ++i) result = compose(result, p);
  return result;
}

namespace {

// Canonical fingerprint of a program over its own space: pre and post bits.
struct ProgramKey {
  Bitset pre;
  Bitset post;
  bool operator==(const ProgramKey&) const = default;
};

struct ProgramKeyHash {
  std::size_t operator()(const ProgramKey& k) const {
    return k.pre.hash() * 1315423911u ^ k.post.hash();
  }
};

constexpr std::size_t kPowerCap = 10000;

}  // namespace

Program arbitrary_rep(const Program& p) {
  std::unordered_set<ProgramKey, ProgramKeyHash> seen;
  Program current = power(p, 0);
  Program accumulated = current;
  seen.insert({current.pre().bits(), current.post().bits()});
  for (std::size_t i = 1; i <= kPowerCap; ++i) {
    current = (i == 1) ? p : compose(current, p);
    if (!seen.insert({current.pre().bits(), current.post().bits()}).second)
      return accumulated;
    accumulated = choice(accumulated, current);
  }
  throw usage_error("arbitrary repetition did not cycle within 10000 powers");
}

Program from_loop(const Program& a, const Condition& c, const Program& b) {
  require_same_space(a.space(), c.space(), "from loop");
  require_same_space(a.space(), b.space(), "from loop");
  return compose(a, corestrict(arbitrary_rep(restrict(~c, b)), c));
}

Program while_loop(const Condition& c, const Program& b) {
  return from_loop(skip(b.space()), ~c, b);
}

Program repeat_loop(const Program& b, const Condition& c) { return from_loop(b, c, b); }

bool is_invariant(const Condition& i, const Program& p) {
  require_same_space(i.space(), p.space(), "invariant check");
  return image(p.post(), i & p.pre()).subset_of(i);
}

bool is_loop_invariant(const Condition& i, const Program& a, const Condition& c,
                       const Program& b) {
  return i.subset_of(a.post().range()) && is_invariant(i, restrict(~c, b));
}

bool invariant_preserving_check(InvOp op, const std::vector<Program>& programs,
                                const std::vector<Condition>& conditions,
                                const Condition& i) {
  Program result;
  switch (op) {
    case InvOp::restrict_op:
      if (programs.size() != 1 || conditions.size() != 1)
        throw usage_error("restriction takes one program and one condition");
      result = restrict(conditions[0], programs[0]);
      break;
    case InvOp::corestrict_op:
      if (programs.size() != 1 || conditions.size() != 1)
        throw usage_error("corestriction takes one program and one condition");
      result = corestrict(programs[0], conditions[0]);
      break;
    case InvOp::choice_op:
      if (programs.size() != 2)
        throw usage_error("choice takes two programs");
      result = choice(programs[0], programs[1]);
      break;
    case InvOp::compose_op:
      if (programs.size() != 2)
        throw usage_error("composition takes two programs");
      result = compose(programs[0], programs[1]);
      break;
  }
  for (const auto& p : programs)
    if (!is_invariant(i, p)) return true;  // premise fails, nothing to preserve
  return is_invariant(i, result);
}

}  // namespace prism
