// SPDX-License-Identifier: Apache-2.0
#include "legendre_cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "legendre/clairaut.hpp"
#include "legendre/conjugate.hpp"
#include "legendre/contact.hpp"
#include "legendre/duality.hpp"
#include "legendre/error.hpp"
#include "legendre/jet_space.hpp"

namespace legendre_cli {

using namespace legendre;

namespace {

constexpr double kPi = std::numbers::pi;

auto label(const char* format, double v) -> std::string {
  char buf[96];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

auto all_points(const Panel& panel) -> std::vector<Vec2> {
  std::vector<Vec2> pts;
  for (const auto& l : panel.curves) pts.insert(pts.end(), l.points.begin(), l.points.end());
  return pts;
}

auto germs() -> std::vector<Panel> {
  std::vector<Panel> panels;
  for (int n : {2, 3}) {
    const Expr t = Expr::variable("t", 0);
    const ParamCurve c = ParamCurve::from_exprs(Expr::power(t, Expr::number(n)), Expr::power(t, Expr::number(n + 1)),
                                                -1.0, 1.0, 400);
    Panel p;
    p.title = n == 2 ? "x = t^2, y = t^3 (n = 2)" : "x = t^3, y = t^4 (n = 3)";
    p.curves.push_back({polyline_points(c, 400), default_stroke(Role::Primal)});
    p.markers = singular_markers(c, false);
    p.viewport = fit_viewport(all_points(p));
    panels.push_back(std::move(p));
  }
  return panels;
}

auto lift_figure() -> std::vector<Panel> {
  const ParamCurve c = parse_curve_spec("param(t^2,t^3,-1,1)").with_samples(400);
  Panel plane;
  plane.title = "semicubic parabola";
  plane.curves.push_back({polyline_points(c, 400), default_stroke(Role::Primal)});
  plane.markers = singular_markers(c, false);
  plane.viewport = fit_viewport(all_points(plane));

  // Oblique view of (x, y, p) with p receding up and to the right.
  const double ax = 0.6 * std::cos(kPi / 6), ay = 0.6 * std::sin(kPi / 6);
  auto project = [&](double x, double y, double p) { return Vec2{x + ax * p, y + ay * p}; };
  Panel lifted;
  lifted.title = "Legendrian lift (x, y, p)";
  std::vector<Vec2> lift_pts, base_pts;
  for (double t : c.grid(400)) {
    const J1Point pt = lift_point(c, t).in_chart(Chart::P);
    lift_pts.push_back(project(pt.x, pt.y, pt.slope));
    base_pts.push_back(project(pt.x, pt.y, 0.0));
  }
  lifted.curves.push_back({base_pts, default_stroke(Role::Guide)});
  lifted.curves.push_back({lift_pts, default_stroke(Role::Dual)});
  const Stroke axis = default_stroke(Role::Lines);
  lifted.curves.push_back({{project(0, 0, -1.6), project(0, 0, 1.6)}, axis});
  lifted.markers.push_back({project(0, 0, 0), MarkerKind::Cusp});
  lifted.viewport = fit_viewport(all_points(lifted));
  return {plane, lifted};
}

auto sine_dual_panel(double range) -> Panel {
  if (!(range > 0.0)) throw Error("sine range must be positive");
  const int samples = std::max(256, static_cast<int>(std::ceil(range / kPi * 512)));
  const ParamCurve sine = ParamCurve::graph(parse("sin(x)"), 0.0, range, samples);
  const ParamCurve d = dual_curve(sine);
  Panel p;
  p.title = label("dual of y = sin x, 0 < x <= %.4g", range);
  p.curves.push_back({polyline_points(d, samples), default_stroke(Role::Dual)});
  // The sine is drawn on (0, range]: the cusp at t = range counts, t = 0 does not.
  for (const Marker& m : singular_markers(d, true)) {
    if (distance(m.at, d.position(0.0)) > 1e-9) p.markers.push_back(m);
  }
  p.viewport = fit_viewport(all_points(p));
  p.equal_aspect = false;
  return p;
}

auto conjugate_figure() -> std::vector<Panel> {
  std::vector<Panel> panels;
  {
    const Expr f = parse("x^2");
    const double p = 1.5;
    const std::vector<double> grid{p};
    const auto r = conjugate_sup(f, {-3, 3}, grid);
    const double t = r.argmax[0];
    Panel panel;
    panel.title = label("f = x^2, p = 1.5: f*(p) = %.4g", r.values[0].to_double());
    const ParamCurve g = ParamCurve::graph(f, -1.5, 2.5, 400);
    panel.curves.push_back({polyline_points(g, 400), default_stroke(Role::Primal)});
    panel.curves.push_back({{{-1.5, -1.5 * p}, {2.5, 2.5 * p}}, default_stroke(Role::Lines)});
    const double fs = r.values[0].value();
    panel.curves.push_back({{{-1.5, -1.5 * p - fs}, {2.5, 2.5 * p - fs}}, default_stroke(Role::Guide)});
    panel.markers.push_back({{t, eval_value(f, t)}, MarkerKind::Point});
    panel.viewport = {-1.5, 2.5, -1.5, 4.5};
    panels.push_back(std::move(panel));
  }
  {
    const Expr f = parse("exp(x)");
    const double p = -0.5;
    const std::vector<double> grid{p};
    const auto r = conjugate_sup(f, {-20, 20}, grid);
    Panel panel;
    panel.title = r.values[0].is_finite() ? "f = exp x, p = -0.5" : "f = exp x, p = -0.5: f*(p) = +inf";
    const ParamCurve g = ParamCurve::graph(f, -3.0, 1.5, 400);
    panel.curves.push_back({polyline_points(g, 400), default_stroke(Role::Primal)});
    panel.curves.push_back({{{-3.0, -3.0 * p}, {1.5, 1.5 * p}}, default_stroke(Role::Lines)});
    panel.viewport = {-3.0, 1.5, -1.5, 4.5};
    panels.push_back(std::move(panel));
  }
  return panels;
}

auto clairaut_figure() -> std::vector<Panel> {
  const auto pb = ClairautProblem::standard(parse("p^3", {"p"}));
  const Discriminant disc = discriminant_curve(pb, {-2.0, 2.0});
  const auto cs = linspace(-2.0, 2.0, 41);
  Panel p;
  p.title = "x p - y = p^3: tangent lines and the semicubic caustic";
  p.viewport = {-4.0, 14.0, -18.0, 18.0};
  for (const auto& line : line_solutions(pb, cs)) {
    p.curves.push_back({{{p.viewport.x_min, line.at(p.viewport.x_min)}, {p.viewport.x_max, line.at(p.viewport.x_max)}},
                        default_stroke(Role::Lines)});
  }
  p.curves.push_back({polyline_points(disc.curve, 400), default_stroke(Role::Envelope)});
  p.markers = singular_markers(disc.curve, false);
  return {p};
}

auto pedal_figure() -> std::vector<Panel> {
  const ParamCurve circle = parse_curve_spec("circle(1)");
  std::vector<Panel> panels;
  std::vector<Vec2> everything;
  for (double rho : {0.3, 0.7, 1.0, 1.6}) {
    const Vec2 pole{rho, 0.0};
    const ParamCurve ped = pedal_curve(circle, pole);
    Panel p;
    p.title = label("pole at distance %.1f from the center", rho);
    p.curves.push_back({polyline_points(circle, 400), default_stroke(Role::Guide)});
    p.curves.push_back({polyline_points(ped, 800), default_stroke(Role::Primal)});
    p.markers = singular_markers(ped, true);
    p.markers.push_back({pole, MarkerKind::Point});
    const auto pts = all_points(p);
    everything.insert(everything.end(), pts.begin(), pts.end());
    panels.push_back(std::move(p));
  }
  const Viewport common = fit_viewport(everything);
  for (auto& p : panels) p.viewport = common;
  return panels;
}

}  // namespace

auto figure_ids() -> const std::vector<std::string>& {
  static const std::vector<std::string> ids{"fig-germs",     "fig-lift",          "fig-sine-dual",
                                            "fig-conjugate", "fig-clairaut-caustic", "fig-pedal-family"};
  return ids;
}

auto polyline_points(const ParamCurve& c, int n) -> std::vector<Vec2> {
  std::vector<Vec2> pts;
  for (double t : c.grid(n)) {
    try {
      pts.push_back(c.position(t));
    } catch (const Error&) {
      pts.push_back({NAN, NAN});
    }
  }
  return pts;
}

auto singular_markers(const ParamCurve& c, bool boundary) -> std::vector<Marker> {
  const SingularPoints sp = find_singular_points(c);
  std::vector<double> ts = sp.interior;
  if (boundary) ts.insert(ts.end(), sp.boundary.begin(), sp.boundary.end());
  std::sort(ts.begin(), ts.end());
  std::vector<Marker> markers;
  for (double t : ts) {
    const PointClass pc = classify_point(c, t);
    if (pc.kind != PointClass::Kind::Singular) continue;
    const Vec2 at = c.position(t);
    // Closed curves report the same point at both ends of the interval.
    if (std::any_of(markers.begin(), markers.end(), [&](const Marker& m) { return distance(m.at, at) < 1e-9; })) {
      continue;
    }
    markers.push_back({at, pc.is_cusp() ? MarkerKind::Cusp : MarkerKind::Singular});
  }
  return markers;
}

auto build_figure(const std::string& id, const FigureOptions& options) -> std::vector<Panel> {
  if (id == "fig-germs") return germs();
  if (id == "fig-lift") return lift_figure();
  if (id == "fig-sine-dual") {
    if (options.range) return {sine_dual_panel(*options.range)};
    return {sine_dual_panel(2 * kPi), sine_dual_panel(4 * kPi), sine_dual_panel(7 * kPi)};
  }
  if (id == "fig-conjugate") return conjugate_figure();
  if (id == "fig-clairaut-caustic") return clairaut_figure();
  if (id == "fig-pedal-family") return pedal_figure();
  throw Error("unknown figure '" + id + "'");
}

auto render_figure(const std::string& id, const FigureOptions& options) -> std::string {
  const auto panels = build_figure(id, options);
  const int width = id == "fig-clairaut-caustic" ? 640 : (id == "fig-pedal-family" ? 300 : 420);
  const int height = id == "fig-clairaut-caustic" ? 640 : (id == "fig-pedal-family" ? 300 : 420);
  return render_svg(panels, width, height);
}

}  // namespace legendre_cli
