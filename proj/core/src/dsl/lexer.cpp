#include "lexer.hpp"

#include <array>
#include <cctype>

#include "prism/error.hpp"

namespace prism::dsl {

namespace {

constexpr std::array kKeywords = {
    "space", "cond",  "prog",   "main",   "true",  "false", "not",
    "and",   "or",    "skip",   "fail",   "havoc", "infeasible",
    "if",    "then",  "elseif", "else",   "end",   "from",  "until",
    "loop",  "while", "repeat", "dchoice", "pre",  "post",
};

}  // namespace

bool is_keyword(const std::string& word) {
  for (const char* kw : kKeywords)
    if (word == kw) return true;
  return false;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tok_line = line, tok_col = column;
    const auto push = [&](Tok kind, std::string s) {
      tokens.push_back({kind, std::move(s), tok_line, tok_col});
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      advance(j - i);
      const Tok kind = is_keyword(word) ? Tok::keyword : Tok::identifier;
      push(kind, std::move(word));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits = text.substr(i, j - i);
      advance(j - i);
      push(Tok::number, std::move(digits));
      continue;
    }
    if (c == '|') {
      if (text.compare(i, 3, "|||") == 0) {
        advance(3);
        push(Tok::atomic, "|||");
        continue;
      }
      if (text.compare(i, 2, "||") == 0) {
        advance(2);
        push(Tok::par, "||");
        continue;
      }
      throw parse_error(line, column, "stray '|' (did you mean '||' or '|||'?)");
    }
    if (c == '[' && i + 1 < text.size() && text[i + 1] == ']') {
      advance(2);
      push(Tok::box, "[]");
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      push(Tok::arrow, "->");
      continue;
    }
    switch (c) {
      case '{': advance(1); push(Tok::lbrace, "{"); continue;
      case '}': advance(1); push(Tok::rbrace, "}"); continue;
      case '(': advance(1); push(Tok::lparen, "("); continue;
      case ')': advance(1); push(Tok::rparen, ")"); continue;
      case ',': advance(1); push(Tok::comma, ","); continue;
      case '=': advance(1); push(Tok::equals, "="); continue;
      case ':': advance(1); push(Tok::colon, ":"); continue;
      case ';': advance(1); push(Tok::semicolon, ";"); continue;
      case '\\': advance(1); push(Tok::backslash, "\\"); continue;
      case '^': advance(1); push(Tok::caret, "^"); continue;
      default:
        throw parse_error(line, column,
                          std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back({Tok::eof, "", line, column});
  return tokens;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::eof: return "end of input";
    case Tok::identifier: return "identifier '" + t.text + "'";
    case Tok::number: return "number '" + t.text + "'";
    case Tok::keyword: return "keyword '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

}  // namespace prism::dsl
