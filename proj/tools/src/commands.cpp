// SPDX-License-Identifier: Apache-2.0
#include "legendre_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "legendre/clairaut.hpp"
#include "legendre/conjugate.hpp"
#include "legendre/contact.hpp"
#include "legendre/curve.hpp"
#include "legendre/duality.hpp"
#include "legendre/error.hpp"
#include "legendre/jet_space.hpp"
#include "legendre_cli/figures.hpp"
#include "legendre_cli/svg.hpp"

namespace legendre_cli {

using namespace legendre;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

auto csv_num(double v) -> std::string {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

auto json_num(double v) -> Json { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

auto curve_arg(const std::string& spec) -> ParamCurve {
  return as_usage([&] { return parse_curve_spec(spec); });
}

auto constant_arg(const std::string& text) -> double {
  return as_usage([&] { return parse_constant(text); });
}

auto list_arg(const std::string& text) -> std::vector<double> {
  std::vector<double> values;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) values.push_back(constant_arg(item));
  if (values.empty()) throw UsageError("empty list '" + text + "'");
  return values;
}

auto pole_arg(const std::string& text) -> Vec2 {
  const auto v = list_arg(text);
  if (v.size() != 2) throw UsageError("pole must be given as x,y");
  return {v[0], v[1]};
}

// Viewport that ignores the few samples escaping toward infinity.
auto robust_viewport(std::vector<Vec2> pts) -> Viewport {
  std::erase_if(pts, [](Vec2 p) { return !std::isfinite(p.x) || !std::isfinite(p.y); });
  if (pts.size() < 20) return fit_viewport(pts);
  std::vector<double> xs, ys;
  for (Vec2 p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const std::size_t lo = xs.size() / 50, hi = xs.size() - 1 - xs.size() / 50;
  const std::vector<Vec2> box{{xs[lo], ys[lo]}, {xs[hi], ys[hi]}};
  return fit_viewport(box, 0.15);
}

auto singular_json(const ParamCurve& c) -> Json {
  Json list = Json::array();
  SingularPoints sp;
  try {
    sp = find_singular_points(c);
  } catch (const Error&) {
    return list;
  }
  for (double t : sp.interior) {
    const Vec2 at = c.position(t);
    list.push_back({{"t", t}, {"x", at.x}, {"y", at.y}, {"class", classify_point(c, t).describe()}});
  }
  return list;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

void emit_summary(Context& ctx, const Json& summary) { ctx.out << summary.dump(2) << "\n"; }

// ---- lift ----

struct LiftArgs {
  std::string curve;
  int samples = 0;
  std::string output = "lift.csv";
};

void run_lift(Context& ctx, const LiftArgs& a) {
  ParamCurve c = curve_arg(a.curve);
  if (a.samples > 0) c = c.with_samples(a.samples);
  const J1Curve jc = lift(c);
  std::string csv = "t,x,y,slope,chart,theta\n";
  double worst = 0.0;
  int chart_q = 0;
  for (std::size_t i = 0; i < jc.params().size(); ++i) {
    const J1Point& pt = jc.samples()[i];
    const double t = jc.params()[i];
    csv += csv_num(t) + "," + csv_num(pt.x) + "," + csv_num(pt.y) + "," + csv_num(pt.slope) + "," +
           (pt.chart == Chart::P ? "P" : "Q") + "," + csv_num(theta_coordinate(pt)) + "\n";
    worst = std::max(worst, std::abs(contact_residual(jc, t)));
    chart_q += pt.chart == Chart::Q ? 1 : 0;
  }
  write_file(a.output, csv);
  emit_summary(ctx, {{"command", "lift"},
                     {"curve", c.label()},
                     {"samples", jc.params().size()},
                     {"chart_q_samples", chart_q},
                     {"max_contact_residual", worst},
                     {"singular_points", singular_json(c)},
                     {"output", a.output}});
}

// ---- dual ----

struct DualArgs {
  std::string curve;
  std::string variant = "legendre";
  std::string format = "csv";
  int samples = 0;
  std::string output;
};

void run_dual(Context& ctx, const DualArgs& a) {
  ParamCurve c = curve_arg(a.curve);
  if (a.samples > 0) c = c.with_samples(a.samples);
  const ParamCurve d = a.variant == "legendre" ? dual_curve(c) : projective_dual(c);
  const SampledCurve s = sample_curve(d);
  const std::string output = a.output.empty() ? "dual." + a.format : a.output;

  Json predicted = Json::array();
  try {
    for (const auto& ps : predict_dual_singularities(c)) {
      predicted.push_back({{"t", ps.t}, {"class", ps.predicted.describe()}});
    }
  } catch (const Error&) {
  }

  if (a.format == "csv") {
    std::string csv = "t,X,Y\n";
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      csv += csv_num(s.params[i]) + "," + csv_num(s.points[i].x) + "," + csv_num(s.points[i].y) + "\n";
    }
    write_file(output, csv);
  } else {
    Panel primal;
    primal.title = c.label().empty() ? "curve" : c.label();
    primal.curves.push_back({polyline_points(c, c.samples()), default_stroke(Role::Primal)});
    primal.viewport = robust_viewport(primal.curves[0].points);
    Panel dual;
    dual.title = a.variant + " dual";
    dual.curves.push_back({polyline_points(d, c.samples()), default_stroke(Role::Dual)});
    dual.viewport = robust_viewport(dual.curves[0].points);
    try {
      dual.markers = singular_markers(d, false);
    } catch (const Error&) {
    }
    const std::vector<Panel> panels{primal, dual};
    write_file(output, render_svg(panels, 420, 420));
  }
  Json excluded = Json::array();
  for (double t : s.excluded) excluded.push_back(t);
  emit_summary(ctx, {{"command", "dual"},
                     {"curve", c.label()},
                     {"variant", a.variant},
                     {"samples", s.points.size()},
                     {"excluded", excluded},
                     {"singular_points", singular_json(d)},
                     {"predicted", predicted},
                     {"output", output}});
}

// ---- conjugate ----

struct ConjugateArgs {
  std::string f;
  double xmin = -10, xmax = 10, pmin = -5, pmax = 5;
  int n = 101;
  bool concave = false;
  std::string output = "conjugate.csv";
};

void run_conjugate(Context& ctx, const ConjugateArgs& a) {
  const Expr f = as_usage([&] { return parse(a.f, {"x"}); });
  if (!(a.xmin < a.xmax) || !(a.pmin <= a.pmax)) throw UsageError("intervals must be increasing");
  if (a.n < 1) throw UsageError("--n must be positive");
  const auto grid = linspace(a.pmin, a.pmax, a.n);
  const ConjugateResult r =
      a.concave ? conjugate_concave(f, {a.xmin, a.xmax}, grid) : conjugate_sup(f, {a.xmin, a.xmax}, grid);
  std::string csv = "p,f_star,finite\n";
  int finite = 0;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const bool ok = r.values[i].is_finite();
    finite += ok ? 1 : 0;
    csv += csv_num(r.grid[i]) + "," + (ok ? csv_num(r.values[i].value()) : std::string("inf")) + "," +
           (ok ? "1" : "0") + "\n";
  }
  write_file(a.output, csv);
  Json domain = Json::array();
  for (const auto& iv : r.effective_domain) domain.push_back({iv.lo, iv.hi});
  emit_summary(ctx, {{"command", "conjugate"},
                     {"f", f.to_string()},
                     {"points", r.grid.size()},
                     {"finite", finite},
                     {"effective_domain", domain},
                     {"output", a.output}});
}

// ---- clairaut ----

struct ClairautArgs {
  std::string f, F, zeroset, lines;
  double pmin = -2, pmax = 2;
  std::string format = "csv";
  std::string output;
};

void run_clairaut(Context& ctx, const ClairautArgs& a) {
  if (a.f.empty() == a.F.empty()) throw UsageError("give exactly one of --f or --F");
  if (!a.F.empty() && a.zeroset.empty()) throw UsageError("--F needs --zeroset");
  const bool general = !a.F.empty();
  const ClairautProblem pb = general ? ClairautProblem::general(as_usage([&] { return parse(a.F, {"u", "v"}); }),
                                                                curve_arg(a.zeroset))
                                     : ClairautProblem::standard(as_usage([&] { return parse(a.f, {"p"}); }));
  const std::vector<double> cs = a.lines.empty() ? linspace(a.pmin, a.pmax, 41) : list_arg(a.lines);
  if (general) {
    for (double c : cs) {
      if (!pb.zero_set().interval().contains(c)) {
        throw Error("line parameter " + csv_num(c) + " outside the zero-set parameter interval");
      }
    }
  }
  const Discriminant disc = general ? Discriminant{general_discriminant(pb), false}
                                    : discriminant_curve(pb, {a.pmin, a.pmax});
  const auto lines = line_solutions(pb, cs);

  const auto params = disc.curve.grid(401);
  const ResidualReport sing = residual(pb, SingularSolution{disc.curve}, params);
  double line_res = 0.0;
  const auto xs = linspace(-5, 5, 21);
  for (const auto& line : lines) line_res = std::max(line_res, residual(pb, line, xs).max_abs);
  const EnvelopeReport env = envelope_check(pb, lines, disc);
  double env_err = 0.0;
  for (const auto& c : env.checks) env_err = std::max({env_err, c.point_error, c.slope_error});

  const std::string output = a.output.empty() ? "clairaut." + a.format : a.output;
  const auto disc_pts = polyline_points(disc.curve, 401);
  if (a.format == "csv") {
    std::string csv = "s,x,y\n";
    for (std::size_t i = 0; i < params.size(); ++i) {
      csv += csv_num(params[i]) + "," + csv_num(disc_pts[i].x) + "," + csv_num(disc_pts[i].y) + "\n";
    }
    write_file(output, csv);
  } else {
    Panel p;
    p.title = general ? pb.F().to_string() + " = 0" : "x p - y = " + pb.f().to_string();
    p.viewport = robust_viewport(disc_pts);
    p.viewport.validate();
    for (const auto& line : lines) {
      p.curves.push_back({{{p.viewport.x_min, line.at(p.viewport.x_min)}, {p.viewport.x_max, line.at(p.viewport.x_max)}},
                          default_stroke(Role::Lines)});
    }
    p.curves.push_back({disc_pts, default_stroke(Role::Envelope)});
    if (!disc.degenerate) p.markers = singular_markers(disc.curve, false);
    const std::vector<Panel> panels{p};
    write_file(output, render_svg(panels, 640, 640));
  }
  emit_summary(ctx, {{"command", "clairaut"},
                     {"form", general ? "general" : "standard"},
                     {"degenerate", disc.degenerate},
                     {"lines", lines.size()},
                     {"singular_residual", json_num(sing.max_abs)},
                     {"singular_skipped", sing.skipped.size()},
                     {"line_residual", json_num(line_res)},
                     {"envelope", {{"applicable", env.applicable}, {"all_pass", env.all_pass()},
                                   {"max_error", json_num(env_err)}}},
                     {"singular_points", disc.degenerate ? Json::array() : singular_json(disc.curve)},
                     {"output", output}});
}

// ---- pedal ----

struct PedalArgs {
  std::string curve, pole = "0,0", power = "1";
  std::string format = "csv";
  int samples = 0;
  std::string output;
};

void run_pedal(Context& ctx, const PedalArgs& a) {
  ParamCurve c = curve_arg(a.curve);
  if (a.samples > 0) c = c.with_samples(a.samples);
  const Vec2 pole = pole_arg(a.pole);
  const double n = constant_arg(a.power);
  const bool iterate = n >= 1 && n <= 8 && n == std::floor(n);

  std::vector<double> ts;
  std::vector<Vec2> pts;
  std::vector<double> excluded;
  Json singular = Json::array();
  std::optional<ParamCurve> iterated;
  if (iterate) {
    ParamCurve cur = c;
    for (int k = 0; k < static_cast<int>(n); ++k) cur = pedal_curve(cur, pole);
    iterated = cur;
    const SampledCurve s = sample_curve(cur);
    ts = s.params;
    pts = s.points;
    excluded = s.excluded;
    singular = singular_json(cur);
  } else {
    for (double t : c.grid()) {
      try {
        const J1Point pt = lift_point(c, t);
        const J1Point local{pt.x - pole.x, pt.y - pole.y, pt.slope, pt.chart};
        const J1Point img = from_lie(pedal_power(to_lie(local), n), LieSide::Image);
        ts.push_back(t);
        pts.push_back({img.x + pole.x, img.y + pole.y});
      } catch (const Error&) {
        excluded.push_back(t);
      }
    }
  }

  const std::string output = a.output.empty() ? "pedal." + a.format : a.output;
  if (a.format == "csv") {
    std::string csv = "t,x,y\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      csv += csv_num(ts[i]) + "," + csv_num(pts[i].x) + "," + csv_num(pts[i].y) + "\n";
    }
    write_file(output, csv);
  } else {
    Panel p;
    p.title = "pedal power " + csv_num(n);
    const auto base = polyline_points(c, c.samples());
    p.curves.push_back({base, default_stroke(Role::Guide)});
    p.curves.push_back({iterated ? polyline_points(*iterated, c.samples()) : pts, default_stroke(Role::Primal)});
    if (iterated) p.markers = singular_markers(*iterated, false);
    p.markers.push_back({pole, MarkerKind::Point});
    std::vector<Vec2> all = base;
    all.insert(all.end(), pts.begin(), pts.end());
    p.viewport = robust_viewport(all);
    const std::vector<Panel> panels{p};
    write_file(output, render_svg(panels, 480, 480));
  }
  Json ex = Json::array();
  for (double t : excluded) ex.push_back(t);
  emit_summary(ctx, {{"command", "pedal"},
                     {"curve", c.label()},
                     {"pole", {pole.x, pole.y}},
                     {"power", n},
                     {"method", iterate ? "iterated pedal" : "polar-contact group"},
                     {"samples", pts.size()},
                     {"excluded", ex},
                     {"singular_points", singular},
                     {"output", output}});
}

// ---- contact-check ----

struct ContactArgs {
  std::string F, G;
  int probes = 1000;
  std::uint64_t seed = 1;
  double box = 3.0;
  std::string output;
};

void run_contact(Context& ctx, const ContactArgs& a) {
  const ContactMap m = as_usage([&] { return ContactMap::parse(a.F, a.G); });
  if (a.probes < 1) throw UsageError("--probes must be positive");
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> u(-a.box, a.box);
  double worst = 0.0;
  int evaluated = 0, skipped = 0;
  std::string csv = "x,y,p,defect\n";
  for (int i = 0; i < a.probes; ++i) {
    const double x = u(rng), y = u(rng), p = u(rng);
    try {
      const double d = contact_defect(m, x, y, p);
      if (!std::isfinite(d)) throw DomainError("non-finite defect");
      worst = std::max(worst, std::abs(d));
      ++evaluated;
      csv += csv_num(x) + "," + csv_num(y) + "," + csv_num(p) + "," + csv_num(d) + "\n";
    } catch (const DomainError&) {
      ++skipped;
    }
  }
  if (evaluated == 0) throw Error("contact defect undefined at every probe");
  if (!a.output.empty()) write_file(a.output, csv);
  const bool contact = worst < kContactTolerance;
  emit_summary(ctx, {{"command", "contact-check"},
                     {"F", m.F.to_string()},
                     {"G", m.G.to_string()},
                     {"verdict", contact ? "contact" : "not contact"},
                     {"max_defect", worst},
                     {"tolerance", kContactTolerance},
                     {"probes", a.probes},
                     {"evaluated", evaluated},
                     {"skipped", skipped}});
}

// ---- figure ----

struct FigureArgs {
  std::string id;
  std::string range;
  std::string output;
};

void run_figure(Context& ctx, const FigureArgs& a) {
  const auto& ids = figure_ids();
  if (std::find(ids.begin(), ids.end(), a.id) == ids.end()) throw UsageError("unknown figure '" + a.id + "'");
  FigureOptions options;
  if (!a.range.empty()) {
    if (a.id != "fig-sine-dual") throw UsageError("--range only applies to fig-sine-dual");
    options.range = constant_arg(a.range);
  }
  const auto panels = build_figure(a.id, options);
  const std::string svg = render_figure(a.id, options);
  const std::string output = a.output.empty() ? a.id + ".svg" : a.output;
  write_file(output, svg);
  int cusps = 0;
  for (const auto& p : panels) {
    cusps += static_cast<int>(std::count_if(p.markers.begin(), p.markers.end(),
                                            [](const Marker& m) { return m.kind == MarkerKind::Cusp; }));
  }
  emit_summary(ctx, {{"command", "figure"}, {"figure", a.id}, {"panels", panels.size()}, {"cusp_markers", cusps},
                     {"bytes", svg.size()}, {"output", output}});
}

}  // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Legendre duality, conjugation, Clairaut and pedal toolkit", "legendre"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  const std::vector<std::string> formats{"csv", "svg"};

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "Legendrian lift of a curve (CSV)");
  lift_cmd->add_option("--curve", lift_args.curve, "curve spec")->required();
  lift_cmd->add_option("--samples", lift_args.samples, "number of samples");
  lift_cmd->add_option("--output,-o", lift_args.output, "CSV file")->capture_default_str();

  DualArgs dual_args;
  auto* dual_cmd = app.add_subcommand("dual", "dual curve (CSV or SVG)");
  dual_cmd->add_option("--curve", dual_args.curve, "curve spec")->required();
  dual_cmd->add_option("--variant", dual_args.variant)->check(CLI::IsMember({"legendre", "projective"}))
      ->capture_default_str();
  dual_cmd->add_option("--out", dual_args.format)->check(CLI::IsMember(formats))->capture_default_str();
  dual_cmd->add_option("--samples", dual_args.samples, "number of samples");
  dual_cmd->add_option("--output,-o", dual_args.output, "output file (default dual.<out>)");

  ConjugateArgs conj_args;
  auto* conj_cmd = app.add_subcommand("conjugate", "convex conjugate on a p grid (CSV)");
  conj_cmd->add_option("--f", conj_args.f, "expression in x")->required();
  conj_cmd->add_option("--xmin", conj_args.xmin)->capture_default_str();
  conj_cmd->add_option("--xmax", conj_args.xmax)->capture_default_str();
  conj_cmd->add_option("--pmin", conj_args.pmin)->capture_default_str();
  conj_cmd->add_option("--pmax", conj_args.pmax)->capture_default_str();
  conj_cmd->add_option("--n", conj_args.n, "number of p values")->capture_default_str();
  conj_cmd->add_flag("--concave", conj_args.concave, "sup of f(x) - x p for concave f");
  conj_cmd->add_option("--output,-o", conj_args.output)->capture_default_str();

  ClairautArgs cl_args;
  auto* cl_cmd = app.add_subcommand("clairaut", "Clairaut equation: singular solution and line family");
  cl_cmd->add_option("--f", cl_args.f, "right-hand side f(p) of x p - y = f(p)");
  cl_cmd->add_option("--F", cl_args.F, "F(u, v) of F(p, x p - y) = 0");
  cl_cmd->add_option("--zeroset", cl_args.zeroset, "curve spec parametrizing F(u, v) = 0");
  cl_cmd->add_option("--lines", cl_args.lines, "comma-separated line parameters");
  cl_cmd->add_option("--pmin", cl_args.pmin)->capture_default_str();
  cl_cmd->add_option("--pmax", cl_args.pmax)->capture_default_str();
  cl_cmd->add_option("--out", cl_args.format)->check(CLI::IsMember(formats))->capture_default_str();
  cl_cmd->add_option("--output,-o", cl_args.output, "output file (default clairaut.<out>)");

  PedalArgs ped_args;
  auto* ped_cmd = app.add_subcommand("pedal", "pedal curve or pedal power");
  ped_cmd->add_option("--curve", ped_args.curve, "curve spec")->required();
  ped_cmd->add_option("--pole", ped_args.pole, "x,y")->capture_default_str();
  ped_cmd->add_option("--power", ped_args.power, "real exponent n")->capture_default_str();
  ped_cmd->add_option("--out", ped_args.format)->check(CLI::IsMember(formats))->capture_default_str();
  ped_cmd->add_option("--samples", ped_args.samples, "number of samples");
  ped_cmd->add_option("--output,-o", ped_args.output, "output file (default pedal.<out>)");

  ContactArgs ct_args;
  auto* ct_cmd = app.add_subcommand("contact-check", "test the contact condition at random probes");
  ct_cmd->add_option("--F", ct_args.F, "X = F(x, y, p)")->required();
  ct_cmd->add_option("--G", ct_args.G, "Y = G(x, y, p)")->required();
  ct_cmd->add_option("--probes", ct_args.probes)->capture_default_str();
  ct_cmd->add_option("--seed", ct_args.seed)->capture_default_str();
  ct_cmd->add_option("--box", ct_args.box, "probes drawn from [-box, box]^3")->capture_default_str();
  ct_cmd->add_option("--output,-o", ct_args.output, "optional CSV of probes");

  FigureArgs fig_args;
  auto* fig_cmd = app.add_subcommand("figure", "render a catalog figure (SVG)");
  fig_cmd->add_option("id", fig_args.id, "figure id")->required();
  fig_cmd->add_option("--range", fig_args.range, "sine interval end, e.g. 7pi");
  fig_cmd->add_option("--output,-o", fig_args.output, "SVG file (default <id>.svg)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{out, err};
  try {
    if (*lift_cmd) run_lift(ctx, lift_args);
    if (*dual_cmd) run_dual(ctx, dual_args);
    if (*conj_cmd) run_conjugate(ctx, conj_args);
    if (*cl_cmd) run_clairaut(ctx, cl_args);
    if (*ped_cmd) run_pedal(ctx, ped_args);
    if (*ct_cmd) run_contact(ctx, ct_args);
    if (*fig_cmd) run_figure(ctx, fig_args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace legendre_cli
