// SPDX-License-Identifier: Apache-2.0
/*
  The 1-jet space J1 with coordinates (x, y, p), p = dy/dx.

  Points with a vertical tangent live in the second chart Q, which stores the
  co-slope q = dx/dy instead. The Legendrian lift of a curve attaches the
  tangent slope to every point; at a singular point the slope is continued by
  cancelling common leading Taylor terms of (x', y') (at most two L'Hopital
  steps).
*/
#pragma once

#include <functional>
#include <vector>

#include "legendre/curve.hpp"

namespace legendre {

enum class Chart { P, Q };

struct J1Point {
  double x = 0.0;
  double y = 0.0;
  double slope = 0.0;  // dy/dx in chart P, dx/dy in chart Q
  Chart chart = Chart::P;

  /// Same contact element expressed in `target`; throws DomainError when the
  /// slope there would be infinite.
  auto in_chart(Chart target) const -> J1Point;
};

/// Tangent angle in (-pi/2, pi/2].
auto theta_coordinate(const J1Point& pt) -> double;

/// Maximum number of cancelled leading terms when continuing the slope
/// through a singular point.
inline constexpr int kMaxSlopeCancellation = 2;
/// Relative agreement required between one-sided slope limits.
inline constexpr double kOneSidedTolerance = 1e-6;

/// Lift of a single parameter: position plus continued tangent slope. The
/// chart is Q exactly when |x'| < |y'| (after cancellation).
auto lift_point(const ParamCurve& c, double t) -> J1Point;

/// Taylor series of dy/dx (chart P) or dx/dy (chart Q) along the curve.
auto slope_series(const ParamCurve& c, double t, int order, Chart chart) -> Series;

class J1Curve {
 public:
  using PointFn = std::function<J1Point(double t)>;

  /// A curve in J1 over `base`, with the jet-space point at each parameter
  /// given by `at`. Samples are taken on base.grid().
  J1Curve(ParamCurve base, PointFn at);

  auto base() const noexcept -> const ParamCurve& { return base_; }
  auto at(double t) const -> J1Point { return at_(t); }
  auto params() const noexcept -> const std::vector<double>& { return params_; }
  auto samples() const noexcept -> const std::vector<J1Point>& { return samples_; }

 private:
  ParamCurve base_;
  PointFn at_;
  std::vector<double> params_;
  std::vector<J1Point> samples_;
};

/// Legendrian lift. Throws DomainError naming t at an unresolvable singular
/// point.
auto lift(const ParamCurve& c) -> J1Curve;

/// p x'(t) - y'(t) in chart P, q y'(t) - x'(t) in chart Q; zero along a lift.
auto contact_residual(const J1Curve& jc, double t) -> double;

}  // namespace legendre
