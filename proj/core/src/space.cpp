#include "prism/space.hpp"

#include <algorithm>

#include "prism/error.hpp"

namespace prism {

StateSpace::StateSpace(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  const auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end())
    throw usage_error("duplicate state identifier '" + *dup + "' in state space");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> StateSpace::index_of(std::string_view name) const {
  const auto it = std::lower_bound(names_->begin(), names_->end(), name);
  if (it == names_->end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::shared_ptr<const std::vector<std::string>> StateSpace::shared_empty() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

void require_same_space(const StateSpace& a, const StateSpace& b, const char* what) {
  if (a.same_object(b)) return;
  if (a != b)
    throw usage_error(std::string(what) + ": operands live on different state spaces");
}

}  // namespace prism
