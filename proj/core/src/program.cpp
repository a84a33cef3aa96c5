#include "prism/program.hpp"

#include "prism/error.hpp"

namespace prism {

Program::Program(StateSpace space, Condition pre, Relation post)
    : space_(std::move(space)), pre_(std::move(pre)), post_(std::move(post)) {
  require_same_space(space_, pre_.space(), "program construction (pre)");
  require_same_space(space_, post_.space(), "program construction (post)");
}

Program make_program(const StateSpace& space, const Condition& pre, const Relation& post) {
  return Program(space, pre, post);
}

ProgramClassification classify(const Program& p) {
  ProgramClassification c;
  const Condition dom = p.post().domain();
  c.feasible = p.pre().subset_of(dom);
  c.rounded = dom.subset_of(p.pre());
  c.exact = c.feasible && c.rounded;
  c.total = c.feasible && p.pre().is_all();
  c.deterministic = p.post().is_function();
  return c;
}

Condition prog_range(const Program& p) {
  return restrict_rel(p.post(), p.pre()).range();
}

Program version(const Program& p, VersionMode mode) {
  switch (mode) {
    case VersionMode::trim:
      return Program(p.space(), p.pre() & p.post().domain(), p.post());
    case VersionMode::round:
      return Program(p.space(), p.pre(), restrict_rel(p.post(), p.pre()));
    case VersionMode::exact:
      return Program(p.space(), p.pre() & p.post().domain(),
                     restrict_rel(p.post(), p.pre()));
  }
  return p;
}

bool compare(const Program& p, const Program& q, CompareRel rel) {
  if (p.space() != q.space()) return false;
  switch (rel) {
    case CompareRel::equal:
      return p.pre() == q.pre() && p.post() == q.post();
    case CompareRel::equivalent:
      return version(p, VersionMode::round) == version(q, VersionMode::round);
  }
  return false;
}

}  // namespace prism
