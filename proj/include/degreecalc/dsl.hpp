#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degreecalc/errors.hpp"
#include "degreecalc/manifold.hpp"

namespace degreecalc {

/// Syntax error with a 1-based source position and the tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column, std::vector<std::string> expected);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

/// Well-formed syntax that denotes no manifold (base genus < 2, connected
/// sum of mismatched dimensions, ...).
class SemanticError : public Error {
 public:
  SemanticError(std::string message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the manifold DSL and returns the normalized expression.
///
///   expr := term ('x' term)*
///   term := atom ('#' atom)*
///   atom := 'K(' int ';' int ')' | 'S(' nat ')' | 'S1' | '(' expr ')'
Expr parse_expr(std::string_view text);

/// Canonical text of normalize(m); parse_expr(print_expr(m)) == normalize(m).
std::string print_expr(const Expr& m);

}  // namespace degreecalc
