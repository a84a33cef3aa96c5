#pragma once

#include <optional>

#include "prism/program.hpp"

namespace prism {

enum class ChoiceMode { angelic, demonic };

enum class BasicKind { fail, infeasible, havoc, skip };

/// C: p -- executes like p but is applicable only in C.
Program restrict(const Condition& c, const Program& p);

/// p \ D -- executes like p but only keeps results in D. The precondition
/// is left unchanged, so the result may be infeasible; see
/// feasible_corestrict for the variant that repairs this.
Program corestrict(const Program& p, const Condition& d);

/// p U q -- applicable whenever one operand is (angelic) or only where
/// both are (demonic). Operand postconditions are rounded first so that
/// dead pairs of one operand cannot come alive under the other's
/// precondition.
Program choice(const Program& p, const Program& q, ChoiceMode mode = ChoiceMode::angelic);

/// p ; q -- executes like p, then like q. q's postcondition is rounded,
/// and the precondition keeps only the start states from which p can
/// reach a state where q is applicable; dead pairs of q cannot be
/// brought back to life through p.
Program compose(const Program& p, const Program& q);

/// The extreme-case programs: Fail, Infeasible, Havoc, Skip, and their
/// C-restricted variants (Skip_C = <Id[C], C>, etc.).
Program basic(const StateSpace& space, BasicKind kind,
              const std::optional<Condition>& c = std::nullopt);

inline Program fail(const StateSpace& s) { return basic(s, BasicKind::fail); }
inline Program infeasible(const StateSpace& s) { return basic(s, BasicKind::infeasible); }
inline Program havoc(const StateSpace& s) { return basic(s, BasicKind::havoc); }
inline Program skip(const StateSpace& s) { return basic(s, BasicKind::skip); }

/// ((Pre_p n dom(post_p \ C)): p) \ C -- the feasible corestriction.
Program feasible_corestrict(const Program& p, const Condition& c);

}  // namespace prism
