#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardalg/cardinal.hpp"
#include "cardalg/natural.hpp"
#include "cardalg/ordinal.hpp"
#include "cardalg/parse_util.hpp"

namespace cardalg {

/// Expression AST of the cardinal language.
///
///   expr  := sum
///   sum   := prod ('+' prod)*
///   prod  := power ('*' power)*
///   power := atom ('^' power)?            right-associative
///   atom  := NAT | 'aleph' '(' ordinal ')' | NAME '(' expr (',' expr)* ')'
///          | '(' expr ')'
///
/// `2^k` with k an infinite literal is read as the power-set term, so every
/// canonical cardinal rendering parses back to itself.
struct Expr {
  enum class Kind { Number, Aleph, Add, Mul, Pow, Call };

  Kind kind = Kind::Number;
  Natural number;
  Ordinal index;
  std::string name;
  std::vector<Expr> args;
  std::size_t offset = 0;  // source position; ignored by ==

  static Expr make_number(Natural n);
  static Expr make_aleph(Ordinal index);
  static Expr make_add(Expr a, Expr b);
  static Expr make_mul(Expr a, Expr b);
  static Expr make_pow(Expr a, Expr b);
  static Expr make_call(std::string name, std::vector<Expr> args);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Names callable in the expression language with their arities
/// (max accepts two or more arguments).
struct FunctionInfo {
  std::string_view name;
  std::size_t min_args;
  std::size_t max_args;
};
const std::vector<FunctionInfo>& expression_functions();

Expr parse_expr(std::string_view text);
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering with minimal parentheses.
std::string render(const Expr& e);

Expr to_expr(const Cardinal& c);

/// Reads a literal-shaped expression (numbers, alephs, 2^k, exp, max,
/// between) as a Cardinal. Returns nullopt for operator applications.
std::optional<Cardinal> as_literal(const Expr& e);

/// as_literal, but only if the term is in normal form for `mode`.
std::optional<Cardinal> value_of(const Expr& e, Mode mode);

}  // namespace cardalg
