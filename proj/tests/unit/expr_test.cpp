// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "legendre/error.hpp"
#include "legendre/expr.hpp"
#include "random_expr.hpp"

using namespace legendre;

TEST_CASE("power of the variable parses to Pow(Var, 3)") {
  const Expr e = parse("x^3");
  REQUIRE(e.kind() == ExprKind::Pow);
  CHECK(e.child(0).kind() == ExprKind::Variable);
  CHECK(e.exponent_value() == 3.0);
}

TEST_CASE("product of a call and the variable") {
  const Expr e = parse("sin(x)*x");
  REQUIRE(e.kind() == ExprKind::Mul);
  CHECK(e.child(0).kind() == ExprKind::Call);
  CHECK(e.child(0).func() == Func::Sin);
  CHECK(e.child(1).kind() == ExprKind::Variable);
}

TEST_CASE("dangling operator reports offset and expected operand") {
  try {
    (void)parse("x +");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
    CHECK(e.expected() == std::vector<std::string>{"operand"});
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS((void)parse(""), ParseError);
  CHECK_THROWS_AS((void)parse("   "), ParseError);
  CHECK_THROWS_AS((void)parse("y"), ParseError);
  CHECK_THROWS_AS((void)parse("foo(x)"), ParseError);
  CHECK_THROWS_AS((void)parse("(x"), ParseError);
  CHECK_THROWS_AS((void)parse("x)"), ParseError);
  CHECK_THROWS_AS((void)parse("x^x"), ParseError);
  CHECK_THROWS_AS((void)parse("sin x"), ParseError);
  CHECK_THROWS_AS((void)parse("2 3"), ParseError);
  try {
    (void)parse("x*unknown");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(eval_value(parse("2^3^2"), 0) == doctest::Approx(512));
  CHECK(eval_value(parse("-2^2"), 0) == doctest::Approx(-4));
  CHECK(eval_value(parse("2^-1"), 0) == doctest::Approx(0.5));
  CHECK(eval_value(parse("1-2-3"), 0) == doctest::Approx(-4));
  CHECK(eval_value(parse("8/4/2"), 0) == doctest::Approx(1));
  CHECK(eval_value(parse("2*x^2+1"), 3) == doctest::Approx(19));
  CHECK(eval_value(parse("pi"), 0) == doctest::Approx(std::numbers::pi));
  CHECK(eval_value(parse("1.5e1+x"), 1) == doctest::Approx(16));
}

TEST_CASE("named variables and slots") {
  const Expr e = parse("u^3-v^2", {"u", "v"});
  CHECK(e.max_variable_index() == 1);
  const std::vector<double> at{2.0, 3.0};
  CHECK(evaluate(e, at) == doctest::Approx(-1));
  CHECK(parse("7").is_constant());
  CHECK_FALSE(parse("x+1").is_constant());
}

TEST_CASE("constants with pi") {
  CHECK(parse_constant("7pi") == doctest::Approx(7 * std::numbers::pi));
  CHECK(parse_constant("pi/2") == doctest::Approx(std::numbers::pi / 2));
  CHECK(parse_constant("-1.5") == -1.5);
  CHECK_THROWS_AS((void)parse_constant("x"), ParseError);
}

TEST_CASE("jets of elementary functions") {
  const Jet3 sq = eval_jet(parse("x^2"), 3);
  CHECK(sq.value == 9);
  CHECK(sq.d1 == 6);
  CHECK(sq.d2 == 2);
  CHECK(sq.d3 == 0);
  const Jet3 s = eval_jet(parse("sin(x)"), 0);
  CHECK(s.value == 0);
  CHECK(s.d1 == 1);
  CHECK(s.d2 == 0);
  CHECK(s.d3 == -1);
  const Jet3 ex = eval_jet(parse("exp(x)"), 0);
  CHECK(ex.value == 1);
  CHECK(ex.d1 == 1);
  CHECK(ex.d2 == 1);
  CHECK(ex.d3 == 1);
  const Jet3 t = eval_jet(parse("tan(x)"), 0);
  CHECK(t.d1 == doctest::Approx(1));
  CHECK(t.d3 == doctest::Approx(2));
  const Jet3 r = eval_jet(parse("sqrt(x)"), 4);
  CHECK(r.d1 == doctest::Approx(0.25));
  CHECK(r.d2 == doctest::Approx(-1.0 / 32));
  const Jet3 l = eval_jet(parse("ln(x)"), 2);
  CHECK(l.d3 == doctest::Approx(2.0 / 8));
  const Jet3 p = eval_jet(parse("x^2.5"), 4);
  CHECK(p.d1 == doctest::Approx(2.5 * 8));
}

TEST_CASE("abs at zero is one-sided") {
  const Jet3 a = eval_jet(parse("abs(x)"), 0);
  CHECK(a.one_sided);
  CHECK(a.d1 == 1);
  CHECK_FALSE(eval_jet(parse("abs(x)"), -1).one_sided);
  CHECK(eval_jet(parse("abs(x)"), -1).d1 == -1);
}

TEST_CASE("domain errors name the innermost subexpression") {
  try {
    (void)eval_value(parse("1+ln(x-1)"), 0.5);
    FAIL("no error");
  } catch (const DomainError& e) {
    CHECK(e.subexpression() == "ln(x-1)");
  }
  CHECK_THROWS_AS((void)eval_value(parse("1/x"), 0), DomainError);
  CHECK_THROWS_AS((void)eval_jet(parse("sqrt(x)"), -1), DomainError);
  CHECK_THROWS_AS((void)eval_value(parse("x^0.5"), -1), DomainError);
}

TEST_CASE("printing round-trips on a hand corpus") {
  const std::vector<std::string> corpus{
      "x^3",       "sin(x)*x",      "-x^2",        "(-x)^2",     "2^3^2",      "(2^3)^2",   "1-(2-x)",
      "1-2-x",     "x/(2*x)",       "x/2*x",       "-(x+1)",     "--x",        "x^-2",      "exp(-x^2/2)",
      "ln(abs(x))", "sqrt(1+x^2)",  "tan(x)/cos(x)", "x*(x+1)*(x-1)", "pi*x",   "3.25e-3*x", "x^(1/3)"};
  for (const auto& s : corpus) {
    const Expr e = parse(s);
    const Expr again = parse(e.to_string());
    CHECK_MESSAGE(again == e, s << " printed as " << e.to_string());
  }
}

TEST_CASE("printing round-trips on random trees") {
  testing::RandomExpr gen(17);
  for (int i = 0; i < 500; ++i) {
    const Expr e = gen.tree(5);
    const Expr again = parse(e.to_string());
    REQUIRE_MESSAGE(again == e, e.to_string());
    CHECK(again.to_string() == e.to_string());
  }
}

TEST_CASE("derivatives agree with finite differences on random expressions") {
  testing::RandomExpr gen(2024);
  int checked = 0;
  int attempts = 0;
  while (checked < 1000) {
    REQUIRE(++attempts < 100000);
    const Expr e = gen.tree(4);
    const double x = gen.uniform(-2, 2);
    Jet3 j;
    double fp, fm, fp2, fm2;
    try {
      j = eval_jet(e, x);
      fp = eval_value(e, x + 1e-3);
      fm = eval_value(e, x - 1e-3);
      fp2 = eval_value(e, x + 2e-3);
      fm2 = eval_value(e, x - 2e-3);
    } catch (const DomainError&) {
      continue;
    }
    // Keep to well-scaled samples so the stencils themselves are accurate.
    if (!(std::abs(j.value) < 50 && std::abs(j.d1) < 50 && std::abs(j.d2) < 50 && std::abs(j.d3) < 50)) continue;
    // Fourth-order stencils.
    const double h = 1e-3;
    const double d1 = (fm2 - 8 * fm + 8 * fp - fp2) / (12 * h);
    const double d2 = (-fm2 + 16 * fm - 30 * j.value + 16 * fp - fp2) / (12 * h * h);
    CHECK_MESSAGE(std::abs(j.d1 - d1) <= 1e-6 * (1 + std::abs(j.d1)), e.to_string() << " at " << x);
    CHECK_MESSAGE(std::abs(j.d2 - d2) <= 1e-6 * (1 + std::abs(j.d2)), e.to_string() << " at " << x);
    ++checked;
  }
}

TEST_CASE("substitution composes expressions") {
  const Expr f = parse("x*y", {"x", "y"});
  const std::vector<Expr> with{parse("sin(t)", {"t"}), parse("t^2", {"t"})};
  const Expr g = substitute(f, with);
  CHECK(eval_value(g, 0.7) == doctest::Approx(std::sin(0.7) * 0.49));
  const std::vector<Expr> short_list{parse("t", {"t"})};
  CHECK_THROWS_AS((void)substitute(f, short_list), Error);
}
