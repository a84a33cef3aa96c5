#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prism/ops.hpp"

namespace prism {

/// One guarded arm of a conditional.
struct Branch {
  Condition guard;
  Program body;
};

/// if C_1: p_1, ..., C_n: p_n end -- the angelic choice of the restricted
/// branches. An empty branch list is the empty choice, Fail.
Program conditional(const StateSpace& space, std::span<const Branch> branches);

/// if C then p else q end.
Program if_then_else(const Condition& c, const Program& p, const Program& q);

/// if C then p end, which defaults to Skip outside C.
Program if_then(const Condition& c, const Program& p);

/// p^n. p^0 is Skip restricted to p's precondition; higher powers are
/// repeated program composition.
Program power(const Program& p, std::size_t n);

/// loop p end -- the choice of all powers p^i. Powers over a finite space
/// are eventually periodic, so the union is computed by iterating until a
/// power repeats.
Program arbitrary_rep(const Program& p);

/// from a until C loop b end = a ; (loop (not C): b end) \ C.
Program from_loop(const Program& a, const Condition& c, const Program& b);

/// while C loop b end = from Skip until (not C) loop b end.
Program while_loop(const Condition& c, const Program& b);

/// repeat b until C = from b until C loop b end.
Program repeat_loop(const Program& b, const Condition& c);

/// I is an invariant of p: the image of I n Pre_p through post_p stays
/// inside I.
bool is_invariant(const Condition& i, const Program& p);

/// I is a loop invariant of from a until C loop b end: it is established
/// by a (I within range(post_a)) and preserved by the guarded body.
bool is_loop_invariant(const Condition& i, const Program& a, const Condition& c,
                       const Program& b);

enum class InvOp { restrict_op, corestrict_op, choice_op, compose_op };

/// Given that I is an invariant of every program operand, is it an
/// invariant of the operator's result? (It always is; the law suite
/// checks this.) Restriction and corestriction take one program and one
/// condition; choice and composition take two programs.
bool invariant_preserving_check(InvOp op, const std::vector<Program>& programs,
                                const std::vector<Condition>& conditions,
                                const Condition& i);

}  // namespace prism
