// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "legendre/contact.hpp"
#include "legendre/error.hpp"
#include "legendre/jet_space.hpp"

using namespace legendre;

namespace {

constexpr double kPi = std::numbers::pi;

auto random_point(std::mt19937_64& rng) -> J1Point {
  std::uniform_real_distribution<double> u(-3, 3);
  return {u(rng), u(rng), u(rng), Chart::P};
}

}  // namespace

TEST_CASE("contact defect") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const J1Point q = random_point(rng);
    CHECK(std::abs(contact_defect(legendre_map(), q.x, q.y, q.slope)) < 1e-12);
    CHECK(std::abs(contact_defect(identity_map(), q.x, q.y, q.slope)) < 1e-12);
    CHECK(std::abs(contact_defect(pedal_map(), q.x, q.y, q.slope)) < 1e-9);
  }
  CHECK(contact_defect(ContactMap::parse("x", "p"), 0, 0, 0) == doctest::Approx(-1));
  CHECK(contact_defect(ContactMap::parse("x+p", "y"), 1, 2, 3) == doctest::Approx(3));
  CHECK_THROWS_AS((void)ContactMap::parse("x+q", "y"), ParseError);
}

TEST_CASE("partials") {
  const Partials d = partials(parse("x*y+p^2", {"x", "y", "p"}), 2, 3, 4);
  CHECK(d.value == 22);
  CHECK(d.dx == 3);
  CHECK(d.dy == 2);
  CHECK(d.dp == 8);
}

TEST_CASE("induced third component") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const J1Point q = random_point(rng);
    CHECK(induced_third(legendre_map(), q.x, q.y, q.slope) == doctest::Approx(q.x));
    CHECK(induced_third(identity_map(), q.x, q.y, q.slope) == doctest::Approx(q.slope));
  }
  CHECK_THROWS_AS((void)induced_third(ContactMap::parse("x+p", "y"), 1, 2, 3), Error);
  CHECK_THROWS_AS((void)induced_third(ContactMap::parse("1", "y"), 1, 2, 3), DomainError);
}

TEST_CASE("pedal slope matches finite differences along the parabola") {
  const ParamCurve parabola = ParamCurve::graph(parse("x^2"), -2, 2);
  const Vec2 pole{0.3, -0.5};
  const ParamCurve ped = pedal_curve(parabola, pole);
  constexpr double h = 1e-5;
  for (double t : {-1.7, -0.6, 0.1, 0.9, 1.5}) {
    const PedalImage img = pedal_point(lift_point(parabola, t), pole);
    const Vec2 a = ped.position(t - h);
    const Vec2 b = ped.position(t + h);
    const Vec2 m = ped.position(t);
    CHECK(img.point.x == doctest::Approx(m.x));
    CHECK(img.point.y == doctest::Approx(m.y));
    const J1Point p = img.point.in_chart(Chart::P);
    CHECK(std::abs(p.slope - (b.y - a.y) / (b.x - a.x)) < 1e-6 * (1 + std::abs(p.slope)));
  }
}

TEST_CASE("pedal examples") {
  const PedalImage flat = pedal_point({4, 1, 0, Chart::P}, {0, 0});
  CHECK(flat.point.x == doctest::Approx(0).epsilon(1e-15));
  CHECK(flat.point.y == doctest::Approx(1));
  CHECK_FALSE(flat.through_pole);

  const ParamCurve line = parse_curve_spec("line(1,2)");
  const ParamCurve ped = pedal_curve(line, {0, 0});
  for (double t : {-1.5, 0.0, 2.0}) {
    CHECK(ped.position(t).x == doctest::Approx(-1));
    CHECK(ped.position(t).y == doctest::Approx(1));
  }

  const PedalImage through = pedal_point({1, 1, 1, Chart::P}, {0, 0});
  CHECK(through.through_pole);
  CHECK(std::abs(through.point.x) < 1e-15);
  CHECK(std::abs(through.point.y) < 1e-15);

  CHECK_THROWS_AS((void)pedal_point({1, 0, 0, Chart::Q}, {0, 0}), DomainError);
  const PedalImage tilted = pedal_point({1, 0, 0.5, Chart::Q}, {0, 0});
  CHECK(tilted.point.x == doctest::Approx(0.8));
  CHECK(tilted.point.y == doctest::Approx(-0.4));

  const ParamCurve circle_ped = pedal_curve(parse_curve_spec("circle(1)"), {0, 0});
  for (double t : {0.0, 1.0, kPi / 2, 4.0}) {
    const Vec2 p = circle_ped.position(t);
    CHECK(p.x == doctest::Approx(std::cos(t)));
    CHECK(p.y == doctest::Approx(std::sin(t)));
  }
}

TEST_CASE("polar-contact coordinates") {
  const LiePoint a = to_lie({1, 0, 1, Chart::P});
  CHECK(a.r == doctest::Approx(1));
  CHECK(a.phi == doctest::Approx(0).epsilon(1e-15));
  CHECK(a.psi == doctest::Approx(-kPi / 4));
  const LiePoint b = to_lie({0, 2, 0, Chart::Q});
  CHECK(b.r == doctest::Approx(2));
  CHECK(b.phi == doctest::Approx(kPi / 2));
  CHECK(std::abs(b.psi) < 1e-15);
  CHECK(to_lie({1, 0, 1, Chart::P}, LieSide::Image).psi == doctest::Approx(kPi / 4));
  CHECK_THROWS_AS((void)to_lie({0, 0, 1, Chart::P}), DomainError);

  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
  CHECK(wrap_angle(0.25) == 0.25);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const J1Point q = random_point(rng);
    for (LieSide side : {LieSide::Preimage, LieSide::Image}) {
      const J1Point back = from_lie(to_lie(q, side), side);
      CHECK(back.x == doctest::Approx(q.x));
      CHECK(back.y == doctest::Approx(q.y));
      CHECK(theta_coordinate(back) == doctest::Approx(theta_coordinate(q)));
    }
  }
}

TEST_CASE("pedal powers form a group") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> pw(-2, 2);
  int checked = 0;
  while (checked < 100) {
    const LiePoint lp{1.5, ang(rng), ang(rng)};
    if (std::abs(std::sin(lp.psi)) < 0.1) continue;
    ++checked;
    const double m = pw(rng);
    const double n = pw(rng);
    const LiePoint once = pedal_power(lp, m + n);
    const LiePoint twice = pedal_power(pedal_power(lp, m), n);
    CHECK(twice.r == doctest::Approx(once.r).epsilon(1e-12));
    CHECK(std::abs(wrap_angle(twice.phi - once.phi)) < 1e-12);
    CHECK(twice.psi == once.psi);
    CHECK(pedal_power(lp, 0).r == lp.r);
    const LiePoint inv = pedal_power(pedal_power(lp, m), -m);
    CHECK(inv.r == doctest::Approx(lp.r).epsilon(1e-12));
    CHECK(std::abs(wrap_angle(inv.phi - lp.phi)) < 1e-12);
  }

  const LiePoint lp{1.0, 0.4, 1.1};
  const LiePoint p1 = pedal_power(lp, 1);
  const LiePoint p2 = pedal_power(lp, 2);
  CHECK(std::hypot(p1.r * std::cos(p1.phi) - p2.r * std::cos(p2.phi), p1.r * std::sin(p1.phi) - p2.r * std::sin(p2.phi)) >
        1e-3);
  CHECK_THROWS_AS((void)pedal_power({1, 0.3, 0.0}, 1), DomainError);
}
