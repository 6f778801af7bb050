// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "legendre/conjugate.hpp"
#include "legendre/error.hpp"

using namespace legendre;

namespace {

auto single(const char* f, Interval x, double p, bool concave = false) -> ExtendedReal {
  const std::vector<double> ps{p};
  const Expr e = parse(f);
  return (concave ? conjugate_concave(e, x, ps) : conjugate_sup(e, x, ps)).values.front();
}

}  // namespace

TEST_CASE("extended reals") {
  CHECK(ExtendedReal::finite(2).value() == 2);
  CHECK(std::isinf(ExtendedReal::plus_infinity().to_double()));
  CHECK_THROWS_AS((void)ExtendedReal::plus_infinity().value(), Error);
  CHECK(ExtendedReal::plus_infinity() == ExtendedReal::plus_infinity());
  CHECK_FALSE(ExtendedReal::finite(0) == ExtendedReal::plus_infinity());
}

TEST_CASE("conjugate examples") {
  CHECK(single("x^2/2", {-10, 10}, 3).value() == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(single("x^2", {-10, 10}, 2).value() == doctest::Approx(1).epsilon(1e-12));
  CHECK(single("exp(x)", {-20, 5}, 1).value() == doctest::Approx(-1).epsilon(1e-10));
  CHECK(single("exp(x)", {-20, 5}, 2).value() == doctest::Approx(2 * std::log(2.0) - 2).epsilon(1e-10));
  CHECK_FALSE(single("exp(x)", {-20, 5}, -1).is_finite());
  CHECK(single("ln(x)", {0.01, 50}, 1, true).value() == doctest::Approx(-1).epsilon(1e-10));

  const ParamCurve c = conjugate_param(parse("exp(x)"), {-2, 2});
  CHECK(c.position(0).x == doctest::Approx(1));
  CHECK(c.position(0).y == doctest::Approx(-1));
}

TEST_CASE("argmax and domain") {
  const std::vector<double> ps = linspace(-3, 3, 61);
  const auto r = conjugate_sup(parse("exp(x)"), {-20, 5}, ps);
  REQUIRE(r.effective_domain.size() == 1);
  CHECK(r.effective_domain[0].lo > 0);
  CHECK(r.effective_domain[0].hi == doctest::Approx(3));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (r.values[i].is_finite()) {
      CHECK(r.argmax[i] == doctest::Approx(std::log(ps[i])).epsilon(1e-6));
    } else {
      CHECK(std::isnan(r.argmax[i]));
    }
  }
}

TEST_CASE("Young's inequality") {
  const Interval dom{-3, 3};
  const std::vector<double> ps = linspace(-5, 5, 101);
  for (const char* f : {"x^2/2", "x^4+x^2", "exp(x)", "x^2+sin(x)/2"}) {
    CAPTURE(f);
    const Expr e = parse(f);
    const auto r = conjugate_sup(e, dom, ps);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(dom.lo, dom.hi);
    for (int k = 0; k < 100; ++k) {
      const double x = u(rng);
      const double fx = eval_value(e, x);
      for (std::size_t i = 0; i < ps.size(); i += 7) {
        if (!r.values[i].is_finite()) continue;
        CHECK(fx + r.values[i].value() >= x * ps[i] - 1e-9);
      }
    }
  }
}

TEST_CASE("conjugates are convex with a contiguous domain") {
  const std::vector<double> ps = linspace(-4, 4, 161);
  for (const char* f : {"x^2/2", "exp(x)", "x^4+x^2", "exp(x)+exp(-x)"}) {
    CAPTURE(f);
    const auto r = conjugate_sup(parse(f), {-2, 2}, ps);
    CHECK(r.effective_domain.size() <= 1);
    for (std::size_t i = 1; i + 1 < ps.size(); ++i) {
      if (!r.values[i - 1].is_finite() || !r.values[i + 1].is_finite()) continue;
      const double second = r.values[i - 1].value() - 2 * r.values[i].value() + r.values[i + 1].value();
      CHECK(second >= -1e-8);
    }
  }
}

TEST_CASE("sup formula agrees with the derivative parametrization") {
  for (const char* f : {"x^2/2", "exp(x)", "x^4+x^2"}) {
    CAPTURE(f);
    const Expr e = parse(f);
    const ParamCurve c = conjugate_param(e, {-1, 1});
    std::vector<double> ps;
    const std::vector<double> ts = linspace(-0.9, 0.9, 37);
    for (double t : ts) ps.push_back(c.position(t).x);
    const auto r = conjugate_sup(e, {-1, 1}, ps);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(std::abs(r.values[i].value() - c.position(ts[i]).y) < 1e-9);
    }
  }
}

TEST_CASE("biconjugation recovers convex functions") {
  const std::vector<double> xs = linspace(-1, 1, 21);
  for (const char* f : {"x^2/2", "x^2", "exp(x)", "x^4+x^2"}) {
    CAPTURE(f);
    const Expr e = parse(f);
    const auto r = biconjugate(e, {-2, 2}, {-8, 8}, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(r.values[i].value() - eval_value(e, xs[i])) < 1e-5);
  }
}

TEST_CASE("conjugate errors") {
  const std::vector<double> ps{0.0};
  CHECK_THROWS_AS((void)conjugate_sup(parse("sin(x)"), {0, 6}, ps), Error);
  CHECK_THROWS_AS((void)conjugate_sup(parse("x"), {0, 1}, ps), Error);
  CHECK_THROWS_AS((void)conjugate_concave(parse("x^2"), {0, 1}, ps), Error);
  CHECK_THROWS_AS((void)conjugate_param(parse("x^3"), {-1, 1}), Error);
  CHECK_THROWS_AS((void)conjugate_sup(parse("x^2"), {1, 0}, ps), Error);
}

TEST_CASE("callable conjugate and helpers") {
  const std::vector<double> ps = linspace(-1, 1, 5);
  const auto r = conjugate_sup([](double x) { return std::abs(x) <= 1 ? 0.0 : INFINITY; }, {-2, 2}, ps);
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(r.values[i].value() == doctest::Approx(std::abs(ps[i])).epsilon(1e-6));

  const std::vector<double> g = linspace(0, 1, 5);
  CHECK(g.front() == 0);
  CHECK(g.back() == 1);
  CHECK(g[2] == doctest::Approx(0.5));
  const std::vector<ExtendedReal> v{ExtendedReal::finite(1), ExtendedReal::plus_infinity(), ExtendedReal::finite(1),
                                    ExtendedReal::finite(1), ExtendedReal::plus_infinity()};
  const auto d = effective_domain(g, v);
  REQUIRE(d.size() == 2);
  CHECK(d[0].lo == 0);
  CHECK(d[0].hi == 0);
  CHECK(d[1].lo == 0.5);
  CHECK(d[1].hi == 0.75);
}
