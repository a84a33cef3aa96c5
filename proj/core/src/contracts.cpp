#include "prism/contracts.hpp"

#include "prism/error.hpp"

namespace prism {

Relation sp(const Program& p, const Condition& c) {
  require_same_space(p.space(), c.space(), "sp");
  return restrict_rel(p.post(), c);
}

Condition wp(const Program& p, const Relation& r) {
  require_same_space(p.space(), r.space(), "wp");
  return p.pre() - (p.post() - r).domain();
}

}  // namespace prism
