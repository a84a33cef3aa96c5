#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prism/concurrency/expr.hpp"
#include "prism/error.hpp"

namespace prism {

/// Result of parsing a source file: the declared environment (one state
/// space, named conditions, named programs) and the optional main
/// expression. Recovery is per declaration, so `errors` may hold several
/// independent diagnostics; the environment contains everything that
/// parsed cleanly.
struct ParseResult {
  Environment env;
  std::optional<Expr> main;
  std::vector<parse_error> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses a source text (".prism" file contents).
ParseResult parse_source(const std::string& text);

/// Like parse_source, but throws the first error.
ParseResult parse_source_or_throw(const std::string& text);

}  // namespace prism
