#include "prism/refinement.hpp"

#include <algorithm>

namespace prism {

namespace {

bool names_subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  // Both are sorted.
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool pairs_subset(const std::vector<std::pair<std::string, std::string>>& a,
                  const std::vector<std::pair<std::string, std::string>>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RefinementParts refinement_parts(const Program& q, const Program& p) {
  RefinementParts parts;
  if (p.space() == q.space()) {
    const Condition both = p.pre() & q.pre();
    parts.state_extends = true;
    parts.pre_weakens = p.pre().subset_of(q.pre());
    parts.post_strengthens = restrict_rel(q.post(), both).subset_of(p.post());
    return parts;
  }
  parts.state_extends = names_subset(p.space().names(), q.space().names());
  parts.pre_weakens = names_subset(p.pre().names(), q.pre().names());
  // post_q restricted to the common precondition, as raw name pairs.
  const auto pre_p = p.pre().names();
  std::vector<std::pair<std::string, std::string>> q_restricted;
  for (auto& pr : q.post().pairs()) {
    if (std::binary_search(pre_p.begin(), pre_p.end(), pr.first) &&
        q.pre().contains(pr.first))
      q_restricted.push_back(std::move(pr));
  }
  parts.post_strengthens = pairs_subset(q_restricted, p.post().pairs());
  return parts;
}

bool refines(const Program& q, const Program& p) {
  const RefinementParts parts = refinement_parts(q, p);
  return parts.post_strengthens && parts.pre_weakens && parts.state_extends;
}

bool specializes(const Program& q, const Program& p) {
  const RefinementParts back = refinement_parts(p, q);
  const RefinementParts fwd = refinement_parts(q, p);
  return fwd.post_strengthens && back.pre_weakens && back.state_extends;
}

bool implements(const Program& q, const Program& p) {
  return classify(q).feasible && refines(q, p);
}

bool correct_for(const Program& q, const Condition& contract_pre,
                 const Relation& contract_post) {
  return implements(q, Program(contract_pre.space(), contract_pre, contract_post));
}

}  // namespace prism
