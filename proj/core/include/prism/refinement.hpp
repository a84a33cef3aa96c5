#pragma once

#include "prism/program.hpp"

namespace prism {

/// The three ingredients of refinement and specialization, evaluated for
/// a candidate q against an original p. Unlike every operator in ops.hpp,
/// these comparisons are allowed to cross state spaces: sets and pair
/// sets of the smaller space are compared by state name inside the
/// larger one.
struct RefinementParts {
  bool state_extends = false;     // S_p subset of S_q
  bool pre_weakens = false;       // Pre_p subset of Pre_q
  bool post_strengthens = false;  // post_q / (Pre_p n Pre_q) subset of post_p
};

RefinementParts refinement_parts(const Program& q, const Program& p);

/// q refines p: post-strengthens, pre-weakens and state-extends.
bool refines(const Program& q, const Program& p);

/// q specializes p: post-strengthens, with precondition and state
/// containment going the other way.
bool specializes(const Program& q, const Program& p);

/// q implements p: q is feasible and refines p.
bool implements(const Program& q, const Program& p);

/// Contracted-program check: "require pre do q ensure post end" holds iff
/// q implements <post, pre>.
bool correct_for(const Program& q, const Condition& contract_pre,
                 const Relation& contract_post);

}  // namespace prism
