#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prism {

/// Raised when an operation is applied to ill-matched operands, e.g. a
/// relation and a condition over different state spaces, or a name that
/// does not belong to the declared space.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical, syntactic or semantic error in a source file. Positions are
/// 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace prism
