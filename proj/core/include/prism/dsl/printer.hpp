#pragma once

#include <string>

#include "prism/concurrency/cnf.hpp"

namespace prism {

/// Renders an expression in the concrete syntax, parenthesized so that
/// parsing the output yields a structurally equal tree. Conditions print
/// as "true", "false" or canonical set literals.
std::string print(const Expr& e);

/// The program-literal form, parseable wherever an expression is expected.
std::string print(const Program& p);

/// The canonical CNF text form (see print_cnf).
std::string print(const Cnf& c);

}  // namespace prism
