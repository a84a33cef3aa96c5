#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace prism::dsl {

enum class Tok {
  identifier,
  number,
  keyword,
  lbrace,
  rbrace,
  lparen,
  rparen,
  comma,
  equals,
  colon,
  semicolon,
  backslash,
  caret,
  arrow,
  box,        // []
  par,        // ||
  atomic,     // |||
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Tokenizes a source text. "--" starts a comment running to end of line.
/// Throws parse_error on an unexpected character.
std::vector<Token> tokenize(const std::string& text);

bool is_keyword(const std::string& word);

/// Human-readable token description for diagnostics.
std::string describe(const Token& t);

}  // namespace prism::dsl
