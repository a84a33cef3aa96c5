#include "prism/dsl/printer.hpp"

namespace prism {

namespace {

// Binding strength, loosest to tightest. Restriction is tightest; a
// looser construct appearing under a tighter one gets parentheses.
enum Level : int {
  level_choice = 0,
  level_par = 1,
  level_seq = 2,
  level_postfix = 3,
  level_atom = 4,
};

std::string cond_text(const Condition& c) {
  if (c.is_all()) return "true";
  if (c.is_empty() && c.space().size() > 0) return "false";
  std::string out = "{";
  bool first = true;
  for (const auto& n : c.names()) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

int level_of(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::choice:
    case ExprKind::demonic_choice:
      return level_choice;
    case ExprKind::conc:
    case ExprKind::atomic_conc:
      return level_par;
    case ExprKind::seq:
      return level_seq;
    case ExprKind::corestrict:
    case ExprKind::power:
      return level_postfix;
    case ExprKind::restrict:
      return level_atom;  // "C: p" needs no parens in postfix positions
    default:
      return level_atom;
  }
}

std::string render(const Expr& e, int min_level);

std::string render_infix(const Expr& e, const char* op, int level) {
  // All infix operators associate to the left, so the right operand must
  // bind strictly tighter.
  return render(e.child(0), level) + op + render(e.child(1), level + 1);
}

std::string render(const Expr& e, int min_level) {
  std::string out;
  switch (e.kind()) {
    case ExprKind::basic_ref:
      out = e.name();
      break;
    case ExprKind::literal:
      out = program_literal_text(e.literal());
      break;
    case ExprKind::choice:
      out = render_infix(e, " [] ", level_choice);
      break;
    case ExprKind::demonic_choice:
      out = render_infix(e, " dchoice ", level_choice);
      break;
    case ExprKind::conc:
      out = render_infix(e, " || ", level_par);
      break;
    case ExprKind::atomic_conc:
      out = render_infix(e, " ||| ", level_par);
      break;
    case ExprKind::seq:
      out = render_infix(e, " ; ", level_seq);
      break;
    case ExprKind::corestrict:
      out = render(e.child(0), level_postfix) + " \\ " + cond_text(e.guard());
      break;
    case ExprKind::power:
      out = render(e.child(0), level_postfix) + "^" + std::to_string(e.exponent());
      break;
    case ExprKind::restrict:
      // Right-associative and tightest: the body renders at atom level.
      out = cond_text(e.guard()) + ": " + render(e.child(0), level_atom);
      break;
    case ExprKind::conditional: {
      out = "if ";
      bool first = true;
      for (const auto& br : e.branches()) {
        if (!first) out += ", ";
        out += cond_text(br.guard) + ": " + render(br.body, level_choice);
        first = false;
      }
      out += " end";
      return out;  // keyword-delimited; never needs parens
    }
    case ExprKind::from_loop:
      return "from " + render(e.child(0), level_choice) + " until " +
             cond_text(e.guard()) + " loop " + render(e.child(1), level_choice) +
             " end";
    case ExprKind::while_loop:
      return "while " + cond_text(e.guard()) + " loop " +
             render(e.child(0), level_choice) + " end";
    case ExprKind::repeat_loop:
      // "repeat b until C" has no closing keyword, so it binds everything
      // after it; parenthesize unless it stands alone.
      out = "repeat " + render(e.child(0), level_choice) + " until " +
            cond_text(e.guard());
      if (min_level > level_choice) out = "(" + out + ")";
      return out;
    case ExprKind::arbitrary_rep:
      return "loop " + render(e.child(0), level_choice) + " end";
  }
  if (level_of(e) < min_level) out = "(" + out + ")";
  return out;
}

}  // namespace

std::string print(const Expr& e) { return render(e, level_choice); }

std::string print(const Program& p) {
  // The extreme programs read better under their own names; anything else
  // prints as a program literal. Both forms parse back to the same value.
  if (p == fail(p.space())) return "fail";
  if (p == skip(p.space())) return "skip";
  if (p == havoc(p.space())) return "havoc";
  if (p == infeasible(p.space())) return "infeasible";
  return program_literal_text(p);
}

std::string print(const Cnf& c) { return print_cnf(c); }

}  // namespace prism
