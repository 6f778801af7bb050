// SPDX-License-Identifier: Apache-2.0
/*
  Smooth planar parametric curves t -> (x(t), y(t)) and their local
  differential geometry: derivative jets, signed curvature, inflection search
  and classification of singular points of the form

      x = alpha t^n + o(t^n),  y = beta t^(n+1) + o(t^(n+1)),  alpha beta != 0.

  A curve is a function returning truncated Taylor series of both
  coordinates around any parameter, so curves built from other curves (duals,
  pedals, reparametrizations) keep exact derivatives.
*/
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "legendre/expr.hpp"
#include "legendre/series.hpp"
#include "legendre/vec2.hpp"

namespace legendre {

struct CurveSeries {
  Series x;
  Series y;
};

/// Returns the Taylor expansion of (x, y) around t to the requested order.
using CurveFn = std::function<CurveSeries(double t, int order)>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  auto width() const noexcept -> double { return hi - lo; }
  auto contains(double v) const noexcept -> bool { return lo <= v && v <= hi; }
};

class ParamCurve {
 public:
  static constexpr int kDefaultSamples = 2048;

  ParamCurve(CurveFn fn, double t_min, double t_max, int samples = kDefaultSamples, std::string label = {});

  /// Curve from two expressions in the variable "t". Probes every sample of
  /// the grid so that domain errors surface here.
  static auto from_exprs(const Expr& x, const Expr& y, double t_min, double t_max,
                         int samples = kDefaultSamples, std::string label = {}) -> ParamCurve;

  /// The graph x = t, y = f(t) of an expression in "x".
  static auto graph(const Expr& f, double x_min, double x_max, int samples = kDefaultSamples,
                    std::string label = {}) -> ParamCurve;

  auto series(double t, int order) const -> CurveSeries;
  auto position(double t) const -> Vec2;

  auto t_min() const noexcept -> double { return t_min_; }
  auto t_max() const noexcept -> double { return t_max_; }
  auto interval() const noexcept -> Interval { return {t_min_, t_max_}; }
  auto samples() const noexcept -> int { return samples_; }
  auto label() const noexcept -> const std::string& { return label_; }
  auto is_graph() const noexcept -> bool { return graph_; }

  /// Uniform grid of samples() parameters covering [t_min, t_max].
  auto grid() const -> std::vector<double>;
  auto grid(int n) const -> std::vector<double>;

  auto with_interval(double t_min, double t_max) const -> ParamCurve;
  auto with_samples(int samples) const -> ParamCurve;
  auto with_label(std::string label) const -> ParamCurve;

  /// Unchecked access for composing new curves.
  auto fn() const noexcept -> const CurveFn& { return fn_; }

 private:
  CurveFn fn_;
  double t_min_;
  double t_max_;
  int samples_;
  std::string label_;
  bool graph_ = false;
};

struct PointJet {
  Vec2 position;
  Vec2 velocity;
  Vec2 acceleration;
  Vec2 jerk;
};

auto point_jet(const ParamCurve& c, double t) -> PointJet;

struct Curvature {
  double kappa = 0.0;
  double kappa_prime = 0.0;
};

/// Signed curvature (counterclockwise positive) and its t-derivative.
/// Throws DomainError at a singular point.
auto curvature(const ParamCurve& c, double t) -> Curvature;

struct InflectionReport {
  /// Interior zeros of curvature with non-vanishing derivative, ascending.
  std::vector<double> inflections;
  /// Interior zeros where the curvature derivative also vanishes.
  std::vector<double> degenerate;
  /// Curvature zeros sitting on t_min or t_max.
  std::vector<double> boundary;
};

inline constexpr double kInflectionTolerance = 1e-10;
inline constexpr double kDegeneracyThreshold = 1e-6;

auto find_inflections(const ParamCurve& c) -> InflectionReport;

struct PointClass {
  enum class Kind { Regular, Singular, Degenerate };
  Kind kind = Kind::Regular;
  int order = 0;  // n of the singular germ; 2 is the semicubic cusp
  double alpha = 0.0;
  double beta = 0.0;

  static auto regular() -> PointClass { return {}; }
  static auto singular(int n, double alpha, double beta) -> PointClass { return {Kind::Singular, n, alpha, beta}; }
  static auto degenerate() -> PointClass { return {Kind::Degenerate, 0, 0.0, 0.0}; }

  auto is_cusp() const noexcept -> bool { return kind == Kind::Singular && order == 2; }
  auto describe() const -> std::string;
};

auto classify_point(const ParamCurve& c, double t0) -> PointClass;

struct SingularPoints {
  std::vector<double> interior;
  std::vector<double> boundary;
};

/// Parameters where the velocity vanishes, located as zero-valued local
/// minima of the speed on the sample grid and refined by golden section.
auto find_singular_points(const ParamCurve& c) -> SingularPoints;

/// c(g(s)) for s in [s_min, s_max]; g must map into c's interval.
auto reparametrize(const ParamCurve& c, const Expr& g, double s_min, double s_max) -> ParamCurve;

/// Catalog / literal curve description, e.g. "parabola", "circle(2)",
/// "graph(sin(x),0,7*pi)", "param(t^2,t^3,-1,1)".
auto parse_curve_spec(std::string_view spec) -> ParamCurve;

}  // namespace legendre
