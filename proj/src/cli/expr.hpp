#pragma once

#include <stdexcept>
#include <string>

#include "qdr/poisson.hpp"

namespace qdr::cli {

// Expression grammar (whitespace is ignored):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '^' | '^h') unary)*     '*' and '^' are the classical
//                                                  product, '^h' the quantum one
//   unary  := '-' unary | atom
//   atom   := int ['/' int] | 'i' | 'h' ['^' ['-'] int]
//           | 'e[' int ']' | 'dx[' int ']' | 'x[' int ']'
//           | 'mode(' int (',' int)* ')' | '(' expr ')'
//
// e[i] and dx[i] denote the same basis 1-form; they only change how results
// are printed. '^h' binds like '^' and associates to the left; write h^2 for
// a power of h and h*e[1] (not e[1]^h) for the classical product with h.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at column " + std::to_string(pos + 1)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ExprContext {
  int dim = 2;
  PoissonField w{2};  // coupling for '^h'
  int modes = -1;     // Fourier truncation; mode(...) is rejected when negative
};

struct ParsedExpr {
  FieldForm value;
  bool uses_dx = false;  // print with the dx prefix
};

ParsedExpr parse_expression(const std::string& text, const ExprContext& ctx);

/// Prints with prefix "e" (or "dx"); x-free real forms print exactly like QForm.
std::string format_form(const FieldForm& a, bool dx_prefix);
/// The h-polynomial form when every coefficient is a real Laurent polynomial.
std::optional<QForm> as_qform(const FieldForm& a);

}  // namespace qdr::cli
