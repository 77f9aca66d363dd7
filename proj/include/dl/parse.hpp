#pragma once

// Expression syntax for the command-line tool.
//
//   sum     := product ('+' product)*
//   product := factor ('*'? factor)*
//   factor  := 'Sq_1' factor | op+ factor? | power
//   power   := primary ('^' int)?
//   primary := ident | int | '(' sum ')' | '[' sum ',' sum ']'
//   op      := ('Q^' int | 'Q_' int | 'P_' int) ('^' int)?
//
// A run of operators binds to the factor that follows it; `Q_1^2` repeats
// Q_1. A run with nothing after it is a bare operator word. The UTF-8
// spellings ξ_i and ξ̄_i read as xi_i and xibar_i.

#include <string>
#include <string_view>
#include <vector>

#include "dl/opcalc.hpp"

namespace dl {

struct Expr {
  enum class Kind { Gen, Int, Sum, Product, Power, Bracket, Apply, Word, CupOne };

  Kind kind = Kind::Int;
  std::string name;      // Gen
  long long value = 0;   // Int literal; exponent of Power
  OpWord word;           // Apply, Word
  std::vector<Expr> args;
  std::size_t pos = 0;   // byte offset in the source text
};

Expr parse(std::string_view text);

/// True when the expression is a sum of bare operator words (or the literal 1).
bool is_operator_expr(const Expr& e);
/// The operator polynomial denoted by an operator expression.
OpPoly operator_poly(const Expr& e);

}  // namespace dl
