#pragma once

#include "prism/relation.hpp"

namespace prism {

/// A program -- equivalently, a specification: a postcondition relation
/// and a precondition set over one finite state space.
///
/// No feasibility or roundedness is imposed at construction and no
/// normalization is ever applied behind the caller's back: trimming and
/// rounding are explicit operations, because equality and equivalence of
/// programs differ exactly by such dead code.
class Program {
 public:
  Program() = default;
  Program(StateSpace space, Condition pre, Relation post);

  const StateSpace& space() const { return space_; }
  const Condition& pre() const { return pre_; }
  const Relation& post() const { return post_; }

  bool operator==(const Program& other) const {
    return space_ == other.space_ && pre_ == other.pre_ && post_ == other.post_;
  }
  bool operator!=(const Program& other) const { return !(*this == other); }

 private:
  StateSpace space_;
  Condition pre_;
  Relation post_;
};

struct ProgramClassification {
  bool feasible = false;       // pre subset of dom(post): no bugs
  bool rounded = false;        // dom(post) subset of pre: no dead code
  bool exact = false;          // feasible and rounded
  bool total = false;          // feasible and pre = S
  bool deterministic = false;  // post is a function
};

enum class VersionMode { trim, round, exact };

enum class CompareRel { equal, equivalent };

/// Constructs a program, checking that all components live on `space`.
Program make_program(const StateSpace& space, const Condition& pre, const Relation& post);

ProgramClassification classify(const Program& p);

/// The usable range of a program: range(post / Pre), equal to the image
/// of the precondition through the postcondition.
Condition prog_range(const Program& p);

/// trim: the feasible version (pre cut down to dom(post));
/// round: the rounded version (post cut down to pre);
/// exact: both.
Program version(const Program& p, VersionMode mode);

/// equal: same space, precondition and postcondition.
/// equivalent: equal rounded versions (and same space).
bool compare(const Program& p, const Program& q, CompareRel rel);

inline bool equal(const Program& p, const Program& q) {
  return compare(p, q, CompareRel::equal);
}
inline bool equivalent(const Program& p, const Program& q) {
  return compare(p, q, CompareRel::equivalent);
}

}  // namespace prism
