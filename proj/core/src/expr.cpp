// SPDX-License-Identifier: Apache-2.0
#include "legendre/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "legendre/error.hpp"

namespace legendre {

struct Expr::Node {
  ExprKind kind = ExprKind::Number;
  double number = 0.0;  // literal, or folded exponent for Pow
  std::string name;
  int index = -1;
  Func func = Func::Sin;
  std::vector<Expr> children;
};

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 7> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"exp", Func::Exp},
    {"ln", Func::Ln},
    {"abs", Func::Abs},
    {"sqrt", Func::Sqrt},
}};

auto lookup_function(std::string_view name) -> std::optional<Func> {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

// Binding strength used by the printer; mirrors the grammar levels.
auto precedence(ExprKind kind) -> int {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Negate:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

auto op_symbol(ExprKind kind) -> char {
  switch (kind) {
    case ExprKind::Add:
      return '+';
    case ExprKind::Sub:
      return '-';
    case ExprKind::Mul:
      return '*';
    case ExprKind::Div:
      return '/';
    default:
      return '^';
  }
}

auto format_number(double v) -> std::string {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> vars) : src_(src), vars_(vars) {}

  auto run() -> Expr {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError("empty input", pos_, {"operand"});
    Expr e = expr();
    skip_space();
    if (pos_ < src_.size()) {
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_, {"operator", "end of input"});
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
  }

  auto peek() -> char {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  auto accept(char c) -> bool {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  auto expr() -> Expr {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(ExprKind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(ExprKind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  auto term() -> Expr {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(ExprKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = Expr::binary(ExprKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  auto unary() -> Expr {
    if (accept('-')) return Expr::negate(unary());
    return power();
  }

  auto power() -> Expr {
    Expr base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    Expr exponent = exponent_operand();
    if (!exponent.is_constant()) throw ParseError("exponent must be numeric", at, {"number"});
    try {
      return Expr::power(base, exponent);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at, {"number"});
    }
  }

  auto exponent_operand() -> Expr {
    if (accept('-')) return Expr::negate(exponent_operand());
    return power();
  }

  auto primary() -> Expr {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) throw ParseError("unbalanced parenthesis", pos_, {"')'"});
      return inner;
    }
    if ((std::isdigit(static_cast<unsigned char>(c)) != 0) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = src_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == ident) return Expr::variable(std::string(ident), static_cast<int>(i));
      }
      if (auto f = lookup_function(ident)) {
        if (!accept('(')) throw ParseError("function call needs '('", pos_, {"'('"});
        Expr arg = expr();
        if (!accept(')')) throw ParseError("unbalanced parenthesis", pos_, {"')'"});
        return Expr::call(*f, arg);
      }
      if (ident == "pi") return Expr::number(std::numbers::pi);
      throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_, {"operand"});
    throw ParseError(std::string("unexpected '") + c + "'", pos_, {"operand"});
  }

  auto number() -> Expr {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
        digits();
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) throw ParseError("malformed number", start, {"number"});
    return Expr::number(value);
  }

  std::string_view src_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

template <typename T>
auto constant_like(double v, std::span<const T> vars) -> T {
  if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return Series::constant(v, vars.empty() ? Series::kMaxOrder : vars[0].order());
  }
}

template <typename T>
auto apply(Func f, const T& a) -> T {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  using std::tan;
  if constexpr (std::is_same_v<T, double>) {
    switch (f) {
      case Func::Ln:
        if (!(a > 0.0)) throw DomainError("ln of non-positive argument");
        break;
      case Func::Sqrt:
        if (a < 0.0) throw DomainError("sqrt of negative argument");
        break;
      default:
        break;
    }
  }
  switch (f) {
    case Func::Sin:
      return sin(a);
    case Func::Cos:
      return cos(a);
    case Func::Tan:
      return tan(a);
    case Func::Exp:
      return exp(a);
    case Func::Ln:
      return log(a);
    case Func::Abs:
      return abs(a);
    case Func::Sqrt:
      return sqrt(a);
  }
  return a;
}

template <typename T>
auto power_of(const T& base, double exponent) -> T {
  if constexpr (std::is_same_v<T, double>) {
    if (base == 0.0 && exponent < 0.0) throw DomainError("division by zero");
    if (base < 0.0 && std::floor(exponent) != exponent) {
      throw DomainError("non-integer power of negative argument");
    }
    return std::pow(base, exponent);
  } else {
    return pow(base, exponent);
  }
}

template <typename T>
auto eval_node(const Expr& e, std::span<const T> vars) -> T {
  switch (e.kind()) {
    case ExprKind::Number:
      return constant_like<T>(e.number_value(), vars);
    case ExprKind::Variable: {
      const auto i = static_cast<std::size_t>(e.variable_index());
      if (i >= vars.size()) throw Error("unbound variable '" + e.variable_name() + "'");
      return vars[i];
    }
    default:
      break;
  }
  // Evaluate children first so that a failing child reports itself.
  std::array<T, 2> args{};
  for (int i = 0; i < e.child_count(); ++i) args[static_cast<std::size_t>(i)] = eval_node<T>(e.child(i), vars);
  try {
    switch (e.kind()) {
      case ExprKind::Negate:
        return -args[0];
      case ExprKind::Add:
        return args[0] + args[1];
      case ExprKind::Sub:
        return args[0] - args[1];
      case ExprKind::Mul:
        return args[0] * args[1];
      case ExprKind::Div:
        if constexpr (std::is_same_v<T, double>) {
          if (args[1] == 0.0) throw DomainError("division by zero");
        }
        return args[0] / args[1];
      case ExprKind::Pow:
        return power_of<T>(args[0], e.exponent_value());
      case ExprKind::Call:
        return apply<T>(e.func(), args[0]);
      default:
        break;
    }
  } catch (const DomainError& err) {
    if (!err.subexpression().empty()) throw;
    throw DomainError(err.reason(), e.to_string());
  }
  return args[0];
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Number:
      out += format_number(e.number_value());
      return;
    case ExprKind::Variable:
      out += e.variable_name();
      return;
    case ExprKind::Negate:
      out += '-';
      print_child(e.child(0), precedence(e.child(0).kind()) < precedence(ExprKind::Negate), out);
      return;
    case ExprKind::Call:
      out += func_name(e.func());
      out += '(';
      print(e.child(0), out);
      out += ')';
      return;
    case ExprKind::Pow: {
      print_child(e.child(0), precedence(e.child(0).kind()) <= precedence(ExprKind::Pow), out);
      out += '^';
      const ExprKind ek = e.child(1).kind();
      print_child(e.child(1), precedence(ek) < precedence(ExprKind::Negate), out);
      return;
    }
    default: {
      const int p = precedence(e.kind());
      print_child(e.child(0), precedence(e.child(0).kind()) < p, out);
      out += op_symbol(e.kind());
      print_child(e.child(1), precedence(e.child(1).kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

auto func_name(Func f) -> std::string_view {
  for (const auto& [n, fn] : kFunctions) {
    if (fn == f) return n;
  }
  return "?";
}

auto Expr::number(double value) -> Expr {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Number;
  n->number = value;
  return Expr(std::move(n));
}

auto Expr::variable(std::string name, int index) -> Expr {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Variable;
  n->name = std::move(name);
  n->index = index;
  return Expr(std::move(n));
}

auto Expr::negate(Expr child) -> Expr {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Negate;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

auto Expr::binary(ExprKind kind, Expr lhs, Expr rhs) -> Expr {
  if (kind != ExprKind::Add && kind != ExprKind::Sub && kind != ExprKind::Mul && kind != ExprKind::Div) {
    throw Error("not a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

auto Expr::power(Expr base, Expr exponent) -> Expr {
  if (!exponent.is_constant()) throw Error("exponent must be numeric");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Pow;
  n->number = evaluate(exponent, std::span<const double>{});
  n->children.push_back(std::move(base));
  n->children.push_back(std::move(exponent));
  return Expr(std::move(n));
}

auto Expr::call(Func func, Expr arg) -> Expr {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Call;
  n->func = func;
  n->children.push_back(std::move(arg));
  return Expr(std::move(n));
}

auto Expr::kind() const noexcept -> ExprKind { return node_->kind; }
auto Expr::number_value() const -> double { return node_->number; }
auto Expr::variable_name() const -> const std::string& { return node_->name; }
auto Expr::variable_index() const -> int { return node_->index; }
auto Expr::func() const -> Func { return node_->func; }
auto Expr::exponent_value() const -> double { return node_->number; }
auto Expr::child(int i) const -> const Expr& { return node_->children.at(static_cast<std::size_t>(i)); }
auto Expr::child_count() const noexcept -> int { return static_cast<int>(node_->children.size()); }

auto Expr::is_constant() const -> bool { return max_variable_index() < 0; }

auto Expr::max_variable_index() const -> int {
  if (kind() == ExprKind::Variable) return variable_index();
  int m = -1;
  for (const auto& c : node_->children) m = std::max(m, c.max_variable_index());
  return m;
}

auto Expr::to_string() const -> std::string {
  std::string out;
  print(*this, out);
  return out;
}

auto operator==(const Expr& a, const Expr& b) -> bool {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Number:
      return a.number_value() == b.number_value();
    case ExprKind::Variable:
      return a.variable_name() == b.variable_name() && a.variable_index() == b.variable_index();
    case ExprKind::Call:
      if (a.func() != b.func()) return false;
      break;
    default:
      break;
  }
  if (a.child_count() != b.child_count()) return false;
  for (int i = 0; i < a.child_count(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

auto parse(std::string_view source, std::span<const std::string> variables) -> Expr {
  return Parser(source, variables).run();
}

auto parse(std::string_view source, std::initializer_list<std::string> variables) -> Expr {
  const std::vector<std::string> vars(variables);
  return parse(source, std::span<const std::string>(vars));
}

auto parse_constant(std::string_view source) -> double {
  std::string text;
  for (std::size_t i = 0; i < source.size(); ++i) {
    text += source[i];
    const bool numeric = std::isdigit(static_cast<unsigned char>(source[i])) != 0 || source[i] == '.';
    if (numeric && source.substr(i + 1, 2) == "pi") text += '*';
  }
  const Expr e = parse(text, std::span<const std::string>{});
  return evaluate(e, std::span<const double>{});
}

auto to_jet3(const Series& s) -> Jet3 {
  Jet3 j;
  j.value = s[0];
  j.d1 = s.order() >= 1 ? s.derivative(1) : 0.0;
  j.d2 = s.order() >= 2 ? s.derivative(2) : 0.0;
  j.d3 = s.order() >= 3 ? s.derivative(3) : 0.0;
  j.one_sided = s.kinked();
  return j;
}

auto evaluate(const Expr& e, std::span<const double> variables) -> double {
  return eval_node<double>(e, variables);
}

auto evaluate(const Expr& e, std::span<const Series> variables) -> Series {
  return eval_node<Series>(e, variables);
}

auto eval_series(const Expr& e, double x, int order) -> Series {
  const std::array<Series, 1> vars{Series::variable(x, order)};
  return evaluate(e, std::span<const Series>(vars));
}

auto eval_jet(const Expr& e, double x) -> Jet3 { return to_jet3(eval_series(e, x, 3)); }

auto eval_value(const Expr& e, double x) -> double {
  const std::array<double, 1> vars{x};
  return evaluate(e, std::span<const double>(vars));
}

auto substitute(const Expr& e, std::span<const Expr> replacements) -> Expr {
  switch (e.kind()) {
    case ExprKind::Number:
      return e;
    case ExprKind::Variable: {
      const auto i = static_cast<std::size_t>(e.variable_index());
      if (i >= replacements.size()) throw Error("no replacement for variable '" + e.variable_name() + "'");
      return replacements[i];
    }
    case ExprKind::Negate:
      return Expr::negate(substitute(e.child(0), replacements));
    case ExprKind::Call:
      return Expr::call(e.func(), substitute(e.child(0), replacements));
    case ExprKind::Pow:
      return Expr::power(substitute(e.child(0), replacements), e.child(1));
    default:
      return Expr::binary(e.kind(), substitute(e.child(0), replacements), substitute(e.child(1), replacements));
  }
}

}  // namespace legendre
