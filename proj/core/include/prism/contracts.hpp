#pragma once

#include "prism/program.hpp"

namespace prism {

/// p sp C -- the strongest postcondition of p for a starting condition C:
/// the postcondition relation restricted to C. (A relation, not a set;
/// its range is the set of reachable states.)
Relation sp(const Program& p, const Condition& c);

/// p wp r -- the weakest precondition of p for a target relation r: the
/// precondition states from which every observable p behaviour is allowed
/// by r, computed as Pre_p - dom(post_p - r).
Condition wp(const Program& p, const Relation& r);

}  // namespace prism
