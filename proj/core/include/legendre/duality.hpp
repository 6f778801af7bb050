// SPDX-License-Identifier: Apache-2.0
/*
  Legendre transformation of J1,

      (x, y, p) -> (X, Y, P),   x = P,  p = X,  y + Y = x p = X P,

  and the dual curves obtained by lifting a planar curve, applying the map
  and projecting back to the (X, Y) plane.
*/
#pragma once

#include <utility>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/jet_space.hpp"

namespace legendre {

struct LegendreImage {
  double X = 0.0;
  double Y = 0.0;
  double P = 0.0;

  auto as_point() const -> J1Point { return {X, Y, P, Chart::P}; }
};

/// Image of a chart-P point. A chart-Q point (vertical tangent) has no finite
/// image and raises DomainError.
auto legendre_point(const J1Point& pt) -> LegendreImage;

/// t -> (p(t), x(t) p(t) - y(t)). The dual inherits the parameter of c, and
/// parameters with a vertical tangent on c raise DomainError on evaluation.
auto dual_curve(const ParamCurve& c) -> ParamCurve;

/// t -> (X/Y, 1/Y) with (X, Y) the Legendre dual. Throws when Y vanishes on
/// every grid sample.
auto projective_dual(const ParamCurve& c) -> ParamCurve;

struct SampledCurve {
  std::vector<double> params;
  std::vector<Vec2> points;
  /// Grid parameters whose evaluation failed or was not finite.
  std::vector<double> excluded;
};

auto sample_curve(const ParamCurve& c, int n) -> SampledCurve;
auto sample_curve(const ParamCurve& c) -> SampledCurve;

struct PredictedSingularity {
  double t = 0.0;
  PointClass predicted;
};

/// Points of a regular curve whose dual is singular: simple inflections map
/// to semicubic cusps, higher-order flattening (order of contact n + 1 with
/// the tangent line) maps to germs of order n. Parameters not listed are
/// predicted regular.
auto predict_dual_singularities(const ParamCurve& c) -> std::vector<PredictedSingularity>;

}  // namespace legendre
