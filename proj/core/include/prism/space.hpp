#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prism/error.hpp"

namespace prism {

/// A finite state space: an ordered set of opaque state identifiers.
///
/// Identifiers are kept sorted so that every set, relation and program
/// over the space prints in one canonical order. Copies share the
/// underlying name table; equality first checks identity, then contents.
/// An empty space is legal (every basic program collapses over it) but
/// must be constructed explicitly.
class StateSpace {
 public:
  StateSpace() : names_(shared_empty()) {}

  /// Builds a space from identifiers. Sorts them; duplicates are a
  /// usage error.
  explicit StateSpace(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }

  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// Index of an identifier, or nullopt if it is not a state of this space.
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const StateSpace& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }
  bool operator!=(const StateSpace& other) const { return !(*this == other); }

  /// True when both spaces share the same name table (fast path used by
  /// the operator-level same-space checks).
  bool same_object(const StateSpace& other) const { return names_ == other.names_; }

 private:
  static std::shared_ptr<const std::vector<std::string>> shared_empty();

  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws usage_error unless both spaces are equal. `what` names the
/// offending operation in the message.
void require_same_space(const StateSpace& a, const StateSpace& b, const char* what);

}  // namespace prism
