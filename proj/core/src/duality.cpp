// SPDX-License-Identifier: Apache-2.0
#include "legendre/duality.hpp"

#include <cmath>
#include <string>

#include "legendre/error.hpp"

namespace legendre {

namespace {

// Evaluates (X, Y) = (p, x p - y) as series of the requested order.
auto legendre_series(const CurveFn& base, double t, int order) -> CurveSeries {
  const auto s = base(t, order + 1 + kMaxSlopeCancellation);
  const Series p =
      cancelling_ratio(s.y.differentiated(), s.x.differentiated(), kMaxSlopeCancellation).truncated(order);
  const Series x = s.x.truncated(order);
  const Series y = s.y.truncated(order);
  return {p, x * p - y};
}

}  // namespace

auto legendre_point(const J1Point& pt) -> LegendreImage {
  if (pt.chart != Chart::P) throw DomainError("vertical tangent: Legendre image escapes to infinity");
  return {pt.slope, pt.x * pt.slope - pt.y, pt.x};
}

auto dual_curve(const ParamCurve& c) -> ParamCurve {
  const CurveFn base = c.fn();
  return ParamCurve([base](double t, int order) { return legendre_series(base, t, order); }, c.t_min(), c.t_max(),
                    c.samples(), c.label().empty() ? std::string{} : "dual of " + c.label());
}

auto projective_dual(const ParamCurve& c) -> ParamCurve {
  const CurveFn base = c.fn();
  ParamCurve pd(
      [base](double t, int order) -> CurveSeries {
        const auto d = legendre_series(base, t, order);
        if (d.y[0] == 0.0) throw DomainError("projective dual undefined where Y = 0");
        const Series inv = Series::constant(1.0, order) / d.y;
        return {d.x * inv, inv};
      },
      c.t_min(), c.t_max(), c.samples(), c.label().empty() ? std::string{} : "projective dual of " + c.label());
  bool any = false;
  for (double t : c.grid()) {
    try {
      const auto d = legendre_series(base, t, 0);
      if (std::abs(d.y[0]) > 1e-14) {
        any = true;
        break;
      }
    } catch (const DomainError&) {
    }
  }
  if (!any) throw Error("projective dual undefined: Y vanishes identically");
  return pd;
}

auto sample_curve(const ParamCurve& c, int n) -> SampledCurve {
  SampledCurve out;
  for (double t : c.grid(n)) {
    try {
      const auto s = c.fn()(t, 0);
      if (std::isfinite(s.x[0]) && std::isfinite(s.y[0])) {
        out.params.push_back(t);
        out.points.push_back({s.x[0], s.y[0]});
        continue;
      }
    } catch (const DomainError&) {
    }
    out.excluded.push_back(t);
  }
  return out;
}

auto sample_curve(const ParamCurve& c) -> SampledCurve { return sample_curve(c, c.samples()); }

auto predict_dual_singularities(const ParamCurve& c) -> std::vector<PredictedSingularity> {
  std::vector<PredictedSingularity> out;
  const InflectionReport report = find_inflections(c);
  for (double t : report.inflections) out.push_back({t, PointClass::singular(2, 0.0, 0.0)});
  for (double t : report.degenerate) {
    // Order of contact between the curve and its tangent line: the first
    // Taylor coefficient with a normal component.
    const auto s = c.series(t, 6);
    const Vec2 a1{s.x[1], s.y[1]};
    const Vec2 normal = (1.0 / norm(a1)) * Vec2{-a1.y, a1.x};
    double scale = 0.0;
    for (int k = 1; k <= 6; ++k) scale = std::max(scale, norm(Vec2{s.x[k], s.y[k]}));
    int contact = 0;
    for (int k = 2; k <= 6; ++k) {
      if (std::abs(dot(normal, Vec2{s.x[k], s.y[k]})) > 1e-6 * scale) {
        contact = k;
        break;
      }
    }
    const int n = contact - 1;
    out.push_back({t, (n == 2 || n == 3) ? PointClass::singular(n, 0.0, 0.0) : PointClass::degenerate()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  return out;
}

}  // namespace legendre
