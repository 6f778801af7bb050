// SPDX-License-Identifier: Apache-2.0
#include "legendre/jet_space.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "legendre/error.hpp"

namespace legendre {

namespace {

constexpr double kVanishing = 1e-13;

struct Velocity {
  Series x;
  Series y;
};

auto velocity_series(const ParamCurve& c, double t, int order) -> Velocity {
  const auto s = c.fn()(t, order + 1);
  return {s.x.differentiated(), s.y.differentiated()};
}

// Number of leading orders where both velocity components vanish.
auto cancelled_terms(const Velocity& v) -> int {
  const double scale = std::max(v.x.magnitude(), v.y.magnitude());
  int m = 0;
  while (m <= kMaxSlopeCancellation && m <= v.x.order() && std::abs(v.x[m]) <= kVanishing * scale &&
         std::abs(v.y[m]) <= kVanishing * scale) {
    ++m;
  }
  return m;
}

auto one_sided_slope(const ParamCurve& c, double t) -> J1Point {
  const auto v = velocity_series(c, t, 0);
  const auto pos = c.fn()(t, 0);
  if (std::abs(v.x[0]) >= std::abs(v.y[0])) return {pos.x[0], pos.y[0], v.y[0] / v.x[0], Chart::P};
  return {pos.x[0], pos.y[0], v.x[0] / v.y[0], Chart::Q};
}

}  // namespace

auto J1Point::in_chart(Chart target) const -> J1Point {
  if (target == chart) return *this;
  if (slope == 0.0) throw DomainError("slope is infinite in the requested chart");
  return {x, y, 1.0 / slope, target};
}

auto theta_coordinate(const J1Point& pt) -> double {
  if (pt.chart == Chart::P) return std::atan(pt.slope);
  double theta = std::numbers::pi / 2 - std::atan(pt.slope);
  if (theta > std::numbers::pi / 2) theta -= std::numbers::pi;
  return theta;
}

auto lift_point(const ParamCurve& c, double t) -> J1Point {
  const auto v = velocity_series(c, t, kMaxSlopeCancellation);
  const int m = cancelled_terms(v);
  if (m > kMaxSlopeCancellation) {
    throw DomainError("unresolvable singular point at t=" + std::to_string(t) + " (all available jets vanish)");
  }
  const auto pos = c.fn()(t, 0);
  J1Point pt{pos.x[0], pos.y[0], 0.0, Chart::P};
  if (std::abs(v.x[m]) >= std::abs(v.y[m])) {
    pt.slope = v.y[m] / v.x[m];
  } else {
    pt.chart = Chart::Q;
    pt.slope = v.x[m] / v.y[m];
  }
  if (v.x.kinked() || v.y.kinked()) {
    // The expansion is the right-hand one; compare against the left side.
    const double h = 1e-8 * (1.0 + std::abs(t));
    const J1Point left = one_sided_slope(c, t - h);
    bool agree = false;
    if (left.chart == pt.chart) {
      agree = std::abs(left.slope - pt.slope) <= kOneSidedTolerance * (1.0 + std::abs(pt.slope));
    } else if (left.slope != 0.0 && pt.slope != 0.0) {
      agree = std::abs(1.0 / left.slope - pt.slope) <= kOneSidedTolerance * (1.0 + std::abs(pt.slope));
    }
    if (!agree) throw DomainError("one-sided slope limits disagree at t=" + std::to_string(t));
  }
  return pt;
}

auto slope_series(const ParamCurve& c, double t, int order, Chart chart) -> Series {
  const auto v = velocity_series(c, t, order + kMaxSlopeCancellation);
  const Series r = chart == Chart::P ? cancelling_ratio(v.y, v.x, kMaxSlopeCancellation)
                                     : cancelling_ratio(v.x, v.y, kMaxSlopeCancellation);
  return r.truncated(order);
}

J1Curve::J1Curve(ParamCurve base, PointFn at) : base_(std::move(base)), at_(std::move(at)) {
  params_ = base_.grid();
  samples_.reserve(params_.size());
  for (double t : params_) samples_.push_back(at_(t));
}

auto lift(const ParamCurve& c) -> J1Curve {
  return J1Curve(c, [c](double t) { return lift_point(c, t); });
}

auto contact_residual(const J1Curve& jc, double t) -> double {
  const J1Point pt = jc.at(t);
  const auto s = jc.base().series(t, 1);
  const double vx = s.x[1];
  const double vy = s.y[1];
  return pt.chart == Chart::P ? pt.slope * vx - vy : pt.slope * vy - vx;
}

}  // namespace legendre
