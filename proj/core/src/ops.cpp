#include "prism/ops.hpp"

#include "prism/error.hpp"

namespace prism {

Program restrict(const Condition& c, const Program& p) {
  require_same_space(c.space(), p.space(), "restriction");
  return Program(p.space(), p.pre() & c, restrict_rel(p.post(), c));
}

Program corestrict(const Program& p, const Condition& d) {
  require_same_space(p.space(), d.space(), "corestriction");
  return Program(p.space(), p.pre(), corestrict_rel(p.post(), d));
}

Program choice(const Program& p, const Program& q, ChoiceMode mode) {
  require_same_space(p.space(), q.space(), "choice");
  const Relation post =
      restrict_rel(p.post(), p.pre()) | restrict_rel(q.post(), q.pre());
  const Condition pre =
      mode == ChoiceMode::angelic ? p.pre() | q.pre() : p.pre() & q.pre();
  return Program(p.space(), pre, post);
}

Program compose(const Program& p, const Program& q) {
  require_same_space(p.space(), q.space(), "composition");
  const Relation post = compose_rel(p.post(), restrict_rel(q.post(), q.pre()));
  const Condition pre = p.pre() & corestrict_rel(p.post(), q.pre()).domain();
  return Program(p.space(), pre, post);
}

Program basic(const StateSpace& space, BasicKind kind, const std::optional<Condition>& c) {
  if (c) require_same_space(space, c->space(), "basic program");
  Program whole;
  switch (kind) {
    case BasicKind::fail:
      whole = Program(space, Condition::none(space), Relation::none(space));
      break;
    case BasicKind::infeasible:
      whole = Program(space, Condition::all(space), Relation::none(space));
      break;
    case BasicKind::havoc:
      whole = Program(space, Condition::all(space), Relation::universal(space));
      break;
    case BasicKind::skip:
      whole = Program(space, Condition::all(space), Relation::identity(space));
      break;
  }
  return c ? restrict(*c, whole) : whole;
}

Program feasible_corestrict(const Program& p, const Condition& c) {
  require_same_space(p.space(), c.space(), "feasible corestriction");
  const Condition pre = p.pre() & corestrict_rel(p.post(), c).domain();
  return corestrict(restrict(pre, p), c);
}

}  // namespace prism
