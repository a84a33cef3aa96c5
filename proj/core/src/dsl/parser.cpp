#include "prism/dsl/parser.hpp"

#include <utility>

#include "lexer.hpp"

namespace prism {

namespace {

using dsl::Tok;
using dsl::Token;

// Syntactic condition tree; names are resolved only once the parser has
// committed to reading a condition.
struct CondAst {
  enum Kind { true_k, false_k, name_k, set_k, not_k, and_k, or_k } kind;
  std::string id;                  // name_k
  std::vector<std::string> elems;  // set_k
  std::vector<CondAst> kids;
  Token tok;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(dsl::tokenize(text)) {}

  ParseResult run() {
    parse_space_decl();
    while (!at(Tok::eof)) {
      const std::size_t before = pos_;
      try {
        if (!parse_declaration()) break;
      } catch (const parse_error& e) {
        result_.errors.push_back(e);
        if (pos_ == before) ++pos_;
        recover();
      }
    }
    return std::move(result_);
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }

  bool at(Tok kind) const { return cur().kind == kind; }

  bool at_kw(const char* word) const {
    return cur().kind == Tok::keyword && cur().text == word;
  }

  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw parse_error(t.line, t.column, "expected " + expected + ", got " + describe(t));
  }

  Token expect(Tok kind, const char* expected) {
    if (!at(kind)) fail(cur(), expected);
    return take();
  }

  void expect_kw(const char* word) {
    if (!at_kw(word)) fail(cur(), std::string("'") + word + "'");
    take();
  }

  [[noreturn]] void semantic(const Token& t, const std::string& message) const {
    throw parse_error(t.line, t.column, message);
  }

  // A state identifier may look like a number ("space {0, 1, 2}").
  std::string state_name() {
    if (at(Tok::identifier) || at(Tok::number)) return take().text;
    fail(cur(), "a state identifier");
  }

  void parse_space_decl() {
    try {
      expect_kw("space");
      expect(Tok::lbrace, "'{'");
      std::vector<std::string> names;
      names.push_back(state_name());
      while (at(Tok::comma)) {
        take();
        if (at(Tok::rbrace)) break;  // trailing comma
        names.push_back(state_name());
      }
      const Token closing = expect(Tok::rbrace, "'}'");
      try {
        result_.env.space = StateSpace(std::move(names));
      } catch (const usage_error& e) {
        semantic(closing, e.what());
      }
    } catch (const parse_error& e) {
      result_.errors.push_back(e);
      pos_ = tokens_.size() - 1;  // cannot make sense of anything without a space
    }
  }

  // Returns false when the file ended after a main declaration.
  bool parse_declaration() {
    if (at_kw("cond")) {
      take();
      const Token name = expect(Tok::identifier, "a condition name");
      check_fresh(name);
      expect(Tok::equals, "'='");
      const CondAst ast = parse_cond();
      result_.env.conditions.emplace(name.text, eval_cond(ast));
      return true;
    }
    if (at_kw("prog")) {
      take();
      const Token name = expect(Tok::identifier, "a program name");
      check_fresh(name);
      expect(Tok::equals, "'='");
      const Expr body = parse_expr();
      try {
        result_.env.programs.emplace(name.text, denote(body, result_.env));
      } catch (const usage_error& e) {
        semantic(name, e.what());
      }
      return true;
    }
    if (at_kw("main")) {
      take();
      expect(Tok::equals, "'='");
      result_.main = parse_expr();
      if (!at(Tok::eof)) fail(cur(), "end of input (main must be the last declaration)");
      return false;
    }
    fail(cur(), "'cond', 'prog' or 'main'");
  }

  void check_fresh(const Token& name) const {
    if (result_.env.conditions.count(name.text) || result_.env.programs.count(name.text))
      semantic(name, "name '" + name.text + "' is already declared");
  }

  // Skips to what looks like the start of the next declaration.
  void recover() {
    while (!at(Tok::eof)) {
      if ((at_kw("cond") || at_kw("prog")) && tokens_[pos_ + 1].kind == Tok::identifier)
        return;
      if (at_kw("main") && tokens_[pos_ + 1].kind == Tok::equals) return;
      ++pos_;
    }
  }

  // ---- conditions ----

  CondAst parse_cond() { return parse_cond_or(); }

  CondAst parse_cond_or() {
    CondAst left = parse_cond_and();
    while (at_kw("or")) {
      const Token op = take();
      CondAst right = parse_cond_and();
      left = CondAst{CondAst::or_k, "", {}, {std::move(left), std::move(right)}, op};
    }
    return left;
  }

  CondAst parse_cond_and() {
    CondAst left = parse_cond_unary();
    while (at_kw("and")) {
      const Token op = take();
      CondAst right = parse_cond_unary();
      left = CondAst{CondAst::and_k, "", {}, {std::move(left), std::move(right)}, op};
    }
    return left;
  }

  CondAst parse_cond_unary() {
    if (at_kw("not")) {
      const Token op = take();
      CondAst inner = parse_cond_unary();
      return CondAst{CondAst::not_k, "", {}, {std::move(inner)}, op};
    }
    return parse_cond_primary();
  }

  CondAst parse_cond_primary() {
    if (at_kw("true")) return CondAst{CondAst::true_k, "", {}, {}, take()};
    if (at_kw("false")) return CondAst{CondAst::false_k, "", {}, {}, take()};
    if (at(Tok::identifier)) {
      const Token t = take();
      return CondAst{CondAst::name_k, t.text, {}, {}, t};
    }
    if (at(Tok::lbrace)) {
      const Token t = take();
      std::vector<std::string> elems;
      if (!at(Tok::rbrace)) {
        elems.push_back(state_name());
        while (at(Tok::comma)) {
          take();
          if (at(Tok::rbrace)) break;
          elems.push_back(state_name());
        }
      }
      expect(Tok::rbrace, "'}'");
      return CondAst{CondAst::set_k, "", std::move(elems), {}, t};
    }
    if (at(Tok::lparen)) {
      take();
      CondAst inner = parse_cond();
      expect(Tok::rparen, "')'");
      return inner;
    }
    fail(cur(), "a condition");
  }

  Condition eval_cond(const CondAst& ast) {
    const StateSpace& space = result_.env.space;
    switch (ast.kind) {
      case CondAst::true_k:
        return Condition::all(space);
      case CondAst::false_k:
        return Condition::none(space);
      case CondAst::name_k: {
        if (!result_.env.has_condition(ast.id))
          semantic(ast.tok, "unknown condition name '" + ast.id + "'");
        return result_.env.resolve_condition(ast.id);
      }
      case CondAst::set_k:
        try {
          return Condition::of(space, ast.elems);
        } catch (const usage_error& e) {
          semantic(ast.tok, e.what());
        }
      case CondAst::not_k:
        return ~eval_cond(ast.kids[0]);
      case CondAst::and_k:
        return eval_cond(ast.kids[0]) & eval_cond(ast.kids[1]);
      case CondAst::or_k:
        return eval_cond(ast.kids[0]) | eval_cond(ast.kids[1]);
    }
    semantic(ast.tok, "malformed condition");
  }

  // ---- expressions ----

  Expr parse_expr() {
    Expr left = parse_par();
    for (;;) {
      if (at(Tok::box)) {
        take();
        left = exprs::choice(std::move(left), parse_par());
      } else if (at_kw("dchoice")) {
        take();
        left = exprs::demonic_choice(std::move(left), parse_par());
      } else {
        return left;
      }
    }
  }

  Expr parse_par() {
    Expr left = parse_seq();
    for (;;) {
      if (at(Tok::par)) {
        take();
        left = exprs::conc(std::move(left), parse_seq());
      } else if (at(Tok::atomic)) {
        take();
        left = exprs::atomic_conc(std::move(left), parse_seq());
      } else {
        return left;
      }
    }
  }

  Expr parse_seq() {
    Expr left = parse_post();
    while (at(Tok::semicolon)) {
      take();
      left = exprs::seq(std::move(left), parse_post());
    }
    return left;
  }

  Expr parse_post() {
    Expr e = parse_pre();
    for (;;) {
      if (at(Tok::backslash)) {
        take();
        e = exprs::corestrict(std::move(e), eval_cond(parse_cond()));
      } else if (at(Tok::caret)) {
        take();
        const Token n = expect(Tok::number, "a repetition count");
        std::size_t count = 0;
        try {
          count = std::stoull(n.text);
        } catch (const std::exception&) {
          semantic(n, "repetition count out of range");
        }
        e = exprs::power(std::move(e), count);
      } else {
        return e;
      }
    }
  }

  // pre := cond ":" pre | atom. A name or parenthesized form could start
  // either alternative, so the condition is parsed tentatively and the
  // parser backtracks unless a ":" follows. Name resolution happens only
  // after the ":" commits us to the restriction reading.
  Expr parse_pre() {
    const std::size_t saved = pos_;
    std::optional<CondAst> ast;
    try {
      ast = parse_cond();
      if (!at(Tok::colon)) ast.reset();
    } catch (const parse_error&) {
      ast.reset();
    }
    if (!ast) {
      pos_ = saved;
      return parse_atom();
    }
    take();  // ':'
    Condition c = eval_cond(*ast);
    return exprs::restrict(std::move(c), parse_pre());
  }

  Expr parse_atom() {
    if (at_kw("skip")) {
      take();
      if (at(Tok::lparen)) {
        take();
        const Condition c = eval_cond(parse_cond());
        expect(Tok::rparen, "')'");
        return exprs::restrict(c, exprs::basic_ref("skip"));
      }
      return exprs::basic_ref("skip");
    }
    if (at_kw("fail")) return take(), exprs::basic_ref("fail");
    if (at_kw("havoc")) return take(), exprs::basic_ref("havoc");
    if (at_kw("infeasible")) return take(), exprs::basic_ref("infeasible");
    if (at(Tok::identifier)) {
      const Token name = take();
      if (!result_.env.has_program(name.text))
        semantic(name, "unknown program name '" + name.text + "'");
      return exprs::basic_ref(name.text);
    }
    if (at_kw("prog")) return parse_program_literal();
    if (at_kw("if")) return parse_if();
    if (at_kw("from")) {
      take();
      Expr a = parse_expr();
      expect_kw("until");
      Condition c = eval_cond(parse_cond());
      expect_kw("loop");
      Expr b = parse_expr();
      expect_kw("end");
      return exprs::from_loop(std::move(a), std::move(c), std::move(b));
    }
    if (at_kw("while")) {
      take();
      Condition c = eval_cond(parse_cond());
      expect_kw("loop");
      Expr b = parse_expr();
      expect_kw("end");
      return exprs::while_loop(std::move(c), std::move(b));
    }
    if (at_kw("repeat")) {
      take();
      Expr b = parse_expr();
      expect_kw("until");
      Condition c = eval_cond(parse_cond());
      return exprs::repeat_loop(std::move(b), std::move(c));
    }
    if (at_kw("loop")) {
      take();
      Expr e = parse_expr();
      expect_kw("end");
      return exprs::arbitrary_rep(std::move(e));
    }
    if (at(Tok::lparen)) {
      take();
      Expr e = parse_expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    fail(cur(), "an expression");
  }

  Expr parse_program_literal() {
    expect_kw("prog");
    const Token open = expect(Tok::lparen, "'('");
    expect_kw("pre");
    expect(Tok::colon, "':'");
    const Condition pre = eval_cond(parse_cond());
    expect(Tok::comma, "','");
    expect_kw("post");
    expect(Tok::colon, "':'");
    expect(Tok::lbrace, "'{'");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!at(Tok::rbrace)) {
      for (;;) {
        std::string from = state_name();
        expect(Tok::arrow, "'->'");
        pairs.emplace_back(std::move(from), state_name());
        if (!at(Tok::comma)) break;
        take();
        if (at(Tok::rbrace)) break;
      }
    }
    expect(Tok::rbrace, "'}'");
    expect(Tok::rparen, "')'");
    try {
      return exprs::literal(make_program(result_.env.space, pre,
                                         Relation::of(result_.env.space, pairs)));
    } catch (const usage_error& e) {
      semantic(open, e.what());
    }
  }

  Expr parse_if() {
    expect_kw("if");
    const CondAst first = parse_cond();
    if (at(Tok::colon)) {
      // Guarded branch list: if C1: e1, C2: e2 end
      take();
      std::vector<ExprBranch> branches;
      branches.push_back({eval_cond(first), parse_expr()});
      while (at(Tok::comma)) {
        take();
        if (at_kw("end")) break;  // trailing comma, normalized away
        const Condition guard = eval_cond(parse_cond());
        expect(Tok::colon, "':'");
        branches.push_back({guard, parse_expr()});
      }
      expect_kw("end");
      return exprs::conditional(std::move(branches), result_.env.space);
    }
    if (at_kw("then")) {
      take();
      Expr body = parse_expr();
      Expr rest = parse_if_tail();
      expect_kw("end");
      return make_if_then_else(eval_cond(first), std::move(body), std::move(rest));
    }
    fail(cur(), "':' or 'then'");
  }

  // elseif chains fold into nested two-branch conditionals; a missing
  // else defaults to skip.
  Expr parse_if_tail() {
    if (at_kw("elseif")) {
      take();
      const Condition c = eval_cond(parse_cond());
      expect_kw("then");
      Expr body = parse_expr();
      Expr rest = parse_if_tail();
      return make_if_then_else(c, std::move(body), std::move(rest));
    }
    if (at_kw("else")) {
      take();
      return parse_expr();
    }
    return exprs::basic_ref("skip");
  }

  Expr make_if_then_else(Condition c, Expr then_e, Expr else_e) {
    std::vector<ExprBranch> branches;
    Condition complement = ~c;
    branches.push_back({std::move(c), std::move(then_e)});
    branches.push_back({std::move(complement), std::move(else_e)});
    return exprs::conditional(std::move(branches), result_.env.space);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseResult result_;
};

}  // namespace

ParseResult parse_source(const std::string& text) {
  try {
    Parser parser(text);
    return parser.run();
  } catch (const parse_error& e) {
    ParseResult result;
    result.errors.push_back(e);
    return result;
  }
}

ParseResult parse_source_or_throw(const std::string& text) {
  ParseResult result = parse_source(text);
  if (!result.ok()) throw result.errors.front();
  return result;
}

}  // namespace prism
