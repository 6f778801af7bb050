// SPDX-License-Identifier: Apache-2.0
#include "legendre/contact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "legendre/error.hpp"

namespace legendre {

namespace {

const std::vector<std::string> kJetVariables{"x", "y", "p"};

constexpr double kVanishing = 1e-13;

}  // namespace

auto ContactMap::parse(std::string_view F, std::string_view G) -> ContactMap {
  return {legendre::parse(F, kJetVariables), legendre::parse(G, kJetVariables)};
}

auto legendre_map() -> ContactMap { return ContactMap::parse("p", "x*p-y"); }

auto identity_map() -> ContactMap { return ContactMap::parse("x", "y"); }

auto pedal_map() -> ContactMap {
  // Foot of the perpendicular in terms of the Legendre image (X, Y) ...
  const std::vector<std::string> image_vars{"X", "Y"};
  const Expr foot_x = legendre::parse("X*Y/(1+X^2)", image_vars);
  const Expr foot_y = legendre::parse("-Y/(1+X^2)", image_vars);
  // ... composed with X = p, Y = x p - y.
  const ContactMap lam = legendre_map();
  const std::array<Expr, 2> image{lam.F, lam.G};
  return {substitute(foot_x, image), substitute(foot_y, image)};
}

auto partials(const Expr& e, double x, double y, double p) -> Partials {
  const std::array<double, 3> at{x, y, p};
  Partials out;
  std::array<double, 3> d{};
  for (std::size_t k = 0; k < 3; ++k) {
    std::array<Series, 3> vars{};
    for (std::size_t j = 0; j < 3; ++j) {
      vars[j] = j == k ? Series::variable(at[j], 1) : Series::constant(at[j], 1);
    }
    const Series s = evaluate(e, std::span<const Series>(vars));
    out.value = s[0];
    d[k] = s[1];
  }
  out.dx = d[0];
  out.dy = d[1];
  out.dp = d[2];
  return out;
}

auto contact_defect(const ContactMap& m, double x, double y, double p) -> double {
  const Partials F = partials(m.F, x, y, p);
  const Partials G = partials(m.G, x, y, p);
  return F.dp * (G.dx + p * G.dy) - G.dp * (F.dx + p * F.dy);
}

auto induced_third(const ContactMap& m, double x, double y, double p) -> double {
  const Partials F = partials(m.F, x, y, p);
  const Partials G = partials(m.G, x, y, p);
  const double scale = std::max({1.0, std::abs(F.dx), std::abs(F.dy), std::abs(F.dp)});
  const double tiny = kVanishing * scale;

  std::vector<double> quotients;
  auto add = [&](double num, double den) {
    if (std::abs(den) > tiny) quotients.push_back(num / den);
  };
  add(G.dp, F.dp);
  add(G.dx + p * G.dy, F.dx + p * F.dy);
  // dY/dX along curves with p' = dp/dx in {0, 1, -1}.
  for (double pp : {0.0, 1.0, -1.0}) add(G.dx + p * G.dy + pp * G.dp, F.dx + p * F.dy + pp * F.dp);
  if (quotients.empty()) throw DomainError("induced slope undefined: dX vanishes identically");

  const auto [lo, hi] = std::minmax_element(quotients.begin(), quotients.end());
  const double h = quotients.front();
  if (*hi - *lo > kInducedSpread * (1.0 + std::abs(h))) {
    std::ostringstream os;
    os << "not a contact map: dY/dX depends on p' (spread " << (*hi - *lo) << ")";
    throw Error(os.str());
  }
  return h;
}

auto pedal_point(const J1Point& pt, Vec2 pole) -> PedalImage {
  if (pt.chart == Chart::Q && std::abs(pt.slope) <= kVerticalCoSlope) {
    throw DomainError("vertical tangent: no finite slope for the pedal formula");
  }
  const J1Point local = pt.in_chart(Chart::P);
  const double x = local.x - pole.x;
  const double y = local.y - pole.y;
  const double p = local.slope;

  const double X = p;
  const double Y = x * p - y;
  const double den = 1.0 + X * X;
  PedalImage out;
  out.point.x = X * Y / den + pole.x;
  out.point.y = -Y / den + pole.y;
  out.through_pole = std::abs(Y) <= 1e-12 * (1.0 + std::abs(x) + std::abs(y));

  const ContactMap map = pedal_map();
  const Partials F = partials(map.F, x, y, p);
  const Partials G = partials(map.G, x, y, p);
  if (out.through_pole && std::abs(F.dp) <= kVanishing && std::abs(G.dp) <= kVanishing) {
    out.point.slope = std::numeric_limits<double>::quiet_NaN();
  } else if (std::abs(F.dp) >= std::abs(G.dp)) {
    out.point.chart = Chart::P;
    out.point.slope = induced_third(map, x, y, p);
  } else {
    out.point.chart = Chart::Q;
    out.point.slope = F.dp / G.dp;
  }
  return out;
}

auto pedal_curve(const ParamCurve& c, Vec2 pole) -> ParamCurve {
  const CurveFn base = c.fn();
  return ParamCurve(
      [base, pole](double t, int order) -> CurveSeries {
        const auto s = base(t, order + 1 + kMaxSlopeCancellation);
        const Series vx = s.x.differentiated();
        const Series vy = s.y.differentiated();
        const Series x = s.x.truncated(order) - pole.x;
        const Series y = s.y.truncated(order) - pole.y;

        const double scale = std::max(vx.magnitude(), vy.magnitude());
        int m = 0;
        while (m < kMaxSlopeCancellation && std::abs(vx[m]) <= kVanishing * scale &&
               std::abs(vy[m]) <= kVanishing * scale) {
          ++m;
        }
        if (std::abs(vx[m]) >= std::abs(vy[m])) {
          const Series p = cancelling_ratio(vy, vx, kMaxSlopeCancellation).truncated(order);
          const Series Y = x * p - y;
          const Series inv = Series::constant(1.0, order) / (p * p + 1.0);
          return {p * Y * inv + pole.x, -Y * inv + pole.y};
        }
        // Same foot formula written with the co-slope q = dx/dy.
        const Series q = cancelling_ratio(vx, vy, kMaxSlopeCancellation).truncated(order);
        const Series W = x - y * q;
        const Series inv = Series::constant(1.0, order) / (q * q + 1.0);
        return {W * inv + pole.x, -W * q * inv + pole.y};
      },
      c.t_min(), c.t_max(), c.samples(), c.label().empty() ? std::string{} : "pedal of " + c.label());
}

auto wrap_angle(double a) -> double {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(a + std::numbers::pi, kTwoPi);
  if (r <= 0.0) r += kTwoPi;
  return r - std::numbers::pi;
}

auto to_lie(const J1Point& pt, LieSide side) -> LiePoint {
  const double r = std::hypot(pt.x, pt.y);
  if (r == 0.0) throw DomainError("polar-contact coordinates undefined at the pole");
  const double phi = wrap_angle(std::atan2(pt.y, pt.x));
  const double theta = theta_coordinate(pt);
  return {r, phi, side == LieSide::Preimage ? phi - theta : theta - phi};
}

auto from_lie(const LiePoint& lp, LieSide side) -> J1Point {
  const double theta = side == LieSide::Preimage ? lp.phi - lp.psi : lp.psi + lp.phi;
  J1Point pt{lp.r * std::cos(lp.phi), lp.r * std::sin(lp.phi), 0.0, Chart::P};
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (std::abs(c) >= std::abs(s)) {
    pt.slope = s / c;
  } else {
    pt.chart = Chart::Q;
    pt.slope = c / s;
  }
  return pt;
}

auto pedal_power(const LiePoint& lp, double n) -> LiePoint {
  if (n == 0.0) return lp;
  const double s = std::abs(std::sin(lp.psi));
  if (s < kPedalPowerSinTolerance) throw DomainError("pedal power undefined: tangent line through the pole");
  return {lp.r * std::pow(s, n), wrap_angle(lp.phi - n * (lp.psi + std::numbers::pi / 2)), lp.psi};
}

}  // namespace legendre
