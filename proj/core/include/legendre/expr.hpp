// SPDX-License-Identifier: Apache-2.0
/*
  Arithmetic expression language.

  Grammar (lowest to highest precedence):

      expr     := term (('+' | '-') term)*
      term     := unary (('*' | '/') unary)*
      unary    := '-' unary | power
      power    := primary ('^' exponent)?
      exponent := '-' exponent | power          (must not contain variables)
      primary  := number | variable | 'pi' | func '(' expr ')' | '(' expr ')'
      func     := sin | cos | tan | exp | ln | abs | sqrt

  '^' is right-associative and its exponent is a numeric constant. Variables
  are the names passed to parse(); the default is the single variable "x".
*/
#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legendre/series.hpp"

namespace legendre {

enum class ExprKind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sin, Cos, Tan, Exp, Ln, Abs, Sqrt };

auto func_name(Func f) -> std::string_view;

/// Immutable expression tree. Copies share structure.
class Expr {
 public:
  static auto number(double value) -> Expr;
  /// `index` is the slot of the variable in the evaluation bindings.
  static auto variable(std::string name, int index) -> Expr;
  static auto negate(Expr child) -> Expr;
  static auto binary(ExprKind kind, Expr lhs, Expr rhs) -> Expr;
  /// Power with a constant exponent expression (evaluated once, here).
  static auto power(Expr base, Expr exponent) -> Expr;
  static auto call(Func func, Expr arg) -> Expr;

  auto kind() const noexcept -> ExprKind;
  auto number_value() const -> double;
  auto variable_name() const -> const std::string&;
  auto variable_index() const -> int;
  auto func() const -> Func;
  /// Constant value of the exponent of a Pow node.
  auto exponent_value() const -> double;
  /// Children: one for Negate/Call, two for binary nodes and Pow.
  auto child(int i) const -> const Expr&;
  auto child_count() const noexcept -> int;

  /// True when no variable occurs in the tree.
  auto is_constant() const -> bool;
  /// Largest variable index in the tree, or -1.
  auto max_variable_index() const -> int;

  /// Minimal-parenthesis text that parses back to an identical tree.
  auto to_string() const -> std::string;

  friend auto operator==(const Expr& a, const Expr& b) -> bool;

  friend auto operator+(const Expr& a, const Expr& b) -> Expr { return binary(ExprKind::Add, a, b); }
  friend auto operator-(const Expr& a, const Expr& b) -> Expr { return binary(ExprKind::Sub, a, b); }
  friend auto operator*(const Expr& a, const Expr& b) -> Expr { return binary(ExprKind::Mul, a, b); }
  friend auto operator/(const Expr& a, const Expr& b) -> Expr { return binary(ExprKind::Div, a, b); }
  friend auto operator-(const Expr& a) -> Expr { return negate(a); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses `source` with the given variable names (slot i is names[i]).
auto parse(std::string_view source, std::span<const std::string> variables) -> Expr;
auto parse(std::string_view source, std::initializer_list<std::string> variables = {"x"}) -> Expr;

/// Value of a constant expression such as "2", "-1.5", "pi/2" or "7pi"
/// (a number directly followed by pi means multiplication).
auto parse_constant(std::string_view source) -> double;

/// Value and derivatives of orders 1 to 3 at a point.
struct Jet3 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  /// Evaluation crossed abs() at zero; d1..d3 are right derivatives.
  bool one_sided = false;
};

auto to_jet3(const Series& s) -> Jet3;

/// Plain evaluation. Throws DomainError naming the offending subexpression.
auto evaluate(const Expr& e, std::span<const double> variables) -> double;
/// Taylor-mode evaluation; every binding must have the same order.
auto evaluate(const Expr& e, std::span<const Series> variables) -> Series;

/// Single-variable convenience: value and exact derivatives at x.
auto eval_jet(const Expr& e, double x) -> Jet3;
auto eval_series(const Expr& e, double x, int order) -> Series;
auto eval_value(const Expr& e, double x) -> double;

/// Replaces variable slot i by replacements[i]. Slots without a replacement
/// are an error.
auto substitute(const Expr& e, std::span<const Expr> replacements) -> Expr;

}  // namespace legendre
