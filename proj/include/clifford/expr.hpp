#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clifford {

// Binary operators, loosest first:
//
//   +  -        add, subtract
//   _|  |_      left, right contraction
//   ^           wedge
//   *           geometric product
//   **          integer power (exponent is a literal)
//   unary - +   (prefix, binds tightest)
//
// All binary operators are left-associative. Contractions sit below the
// other products, so `e(2) _| e(1) * e(2)` reads as e2 _| (e1 e2).
enum class BinaryOp { Add, Subtract, LeftContraction, RightContraction, Wedge, Product };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberLit {
  double value;
};

/// e_12, e[1,10] or a coefficient-glued form like 3e_2 (parsed as 3 * e_2).
struct BladeLit {
  std::vector<std::uint32_t> indices;  // as written; may be unsorted
};

struct VariableRef {
  std::string name;
};

struct Negate {
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Power {
  ExprPtr base;
  unsigned exponent;
};

struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<NumberLit, BladeLit, VariableRef, Negate, Binary, Power, Call> node;
  std::size_t position = 0;  // offset of the node's first character
};

/// `name = expr` or a bare expression.
struct Statement {
  std::optional<std::string> target;
  ExprPtr expr;
};

/// Throws ParseError with the position and expected-token set.
[[nodiscard]] ExprPtr parse_expr(std::string_view input);
[[nodiscard]] Statement parse_statement(std::string_view input);

/// Fully parenthesized prefix form, e.g. "(_| (e 2) (* (e 1) (e 2)))".
[[nodiscard]] std::string to_sexpr(const Expr& e);

/// Names that cannot be bound as variables.
[[nodiscard]] bool is_reserved_name(std::string_view name);

}  // namespace clifford
