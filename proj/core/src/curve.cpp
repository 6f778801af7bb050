// SPDX-License-Identifier: Apache-2.0
#include "legendre/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "legendre/error.hpp"
#include "legendre/numerics.hpp"

namespace legendre {

namespace {

// Velocity below this fraction of the curve's local scale counts as zero.
constexpr double kSingularVelocity = 1e-7;
// Taylor coefficients below this fraction of the local scale count as zero
// during germ classification.
constexpr double kGermCoefficient = 1e-6;

auto coefficient(const CurveSeries& s, int k) -> Vec2 { return {s.x[k], s.y[k]}; }

auto checked_order(int order) -> int {
  if (order < 0 || order > Series::kMaxOrder) throw Error("series order out of range");
  return order;
}

}  // namespace

ParamCurve::ParamCurve(CurveFn fn, double t_min, double t_max, int samples, std::string label)
    : fn_(std::move(fn)), t_min_(t_min), t_max_(t_max), samples_(samples), label_(std::move(label)) {
  if (!(t_min < t_max)) throw Error("curve interval must satisfy t_min < t_max");
  if (samples < 2) throw Error("curve needs at least two samples");
}

auto ParamCurve::from_exprs(const Expr& x, const Expr& y, double t_min, double t_max, int samples,
                            std::string label) -> ParamCurve {
  if (x.max_variable_index() > 0 || y.max_variable_index() > 0) {
    throw Error("curve expressions may only use the parameter t");
  }
  ParamCurve c(
      [x, y](double t, int order) -> CurveSeries {
        const std::array<Series, 1> vars{Series::variable(t, checked_order(order))};
        return {evaluate(x, std::span<const Series>(vars)), evaluate(y, std::span<const Series>(vars))};
      },
      t_min, t_max, samples, std::move(label));
  for (double t : c.grid()) {
    try {
      (void)c.fn()(t, 3);
    } catch (const DomainError& e) {
      throw DomainError(e.reason() + " at t=" + std::to_string(t), e.subexpression());
    }
  }
  return c;
}

auto ParamCurve::graph(const Expr& f, double x_min, double x_max, int samples, std::string label) -> ParamCurve {
  ParamCurve c = from_exprs(Expr::variable("t", 0), f, x_min, x_max, samples, std::move(label));
  c.graph_ = true;
  return c;
}

auto ParamCurve::series(double t, int order) const -> CurveSeries {
  const double slack = 1e-12 * (1.0 + std::max(std::abs(t_min_), std::abs(t_max_)));
  if (t < t_min_ - slack || t > t_max_ + slack) {
    throw DomainError("parameter t=" + std::to_string(t) + " outside [" + std::to_string(t_min_) + ", " +
                      std::to_string(t_max_) + "]");
  }
  return fn_(t, order);
}

auto ParamCurve::position(double t) const -> Vec2 {
  const auto s = series(t, 0);
  return {s.x[0], s.y[0]};
}

auto ParamCurve::grid() const -> std::vector<double> { return grid(samples_); }

auto ParamCurve::grid(int n) const -> std::vector<double> {
  std::vector<double> g(static_cast<std::size_t>(std::max(n, 2)));
  const double step = (t_max_ - t_min_) / static_cast<double>(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = t_min_ + step * static_cast<double>(i);
  g.back() = t_max_;
  return g;
}

auto ParamCurve::with_interval(double t_min, double t_max) const -> ParamCurve {
  ParamCurve c(fn_, t_min, t_max, samples_, label_);
  c.graph_ = graph_;
  return c;
}

auto ParamCurve::with_samples(int samples) const -> ParamCurve {
  ParamCurve c(fn_, t_min_, t_max_, samples, label_);
  c.graph_ = graph_;
  return c;
}

auto ParamCurve::with_label(std::string label) const -> ParamCurve {
  ParamCurve c = *this;
  c.label_ = std::move(label);
  return c;
}

auto point_jet(const ParamCurve& c, double t) -> PointJet {
  const auto s = c.series(t, 3);
  auto d = [&](int k) { return Vec2{s.x.derivative(k), s.y.derivative(k)}; };
  return {d(0), d(1), d(2), d(3)};
}

auto curvature(const ParamCurve& c, double t) -> Curvature {
  const auto s = c.series(t, 3);
  const Series vx = s.x.differentiated();
  const Series vy = s.y.differentiated();
  const Series ax = vx.differentiated();
  const Series ay = vy.differentiated();
  const double speed = std::hypot(vx[0], vy[0]);
  const double scale = std::max({1.0, std::hypot(ax[0], ay[0]), std::abs(vx[0]), std::abs(vy[0])});
  if (speed <= 1e-12 * scale) {
    throw DomainError("curvature undefined at singular point t=" + std::to_string(t) +
                      " (velocity vanishes; see classify_point)");
  }
  const Series num = (vx * ay - vy * ax).truncated(1);
  const Series den = pow((vx * vx + vy * vy).truncated(1), 1.5);
  const Series kappa = num / den;
  return {kappa[0], kappa.derivative(1)};
}

auto find_inflections(const ParamCurve& c) -> InflectionReport {
  InflectionReport report;
  const auto grid = c.grid();
  const std::size_t n = grid.size();
  std::vector<double> kappa(n);
  for (std::size_t i = 0; i < n; ++i) kappa[i] = curvature(c, grid[i]).kappa;

  auto sign = [](double k) { return std::abs(k) < kInflectionTolerance ? 0 : (k > 0.0 ? 1 : -1); };
  auto kappa_at = [&](double t) { return curvature(c, t).kappa; };

  if (sign(kappa.front()) == 0) report.boundary.push_back(grid.front());
  if (sign(kappa.back()) == 0) report.boundary.push_back(grid.back());

  std::vector<double> roots;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (sign(kappa[i]) == 0) roots.push_back(grid[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int a = sign(kappa[i]);
    const int b = sign(kappa[i + 1]);
    if (a * b < 0) roots.push_back(numerics::bisect(kappa_at, grid[i], grid[i + 1], kInflectionTolerance));
  }
  // Zeros of even multiplicity never change sign; catch them as vanishing
  // local minima of |kappa|.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double m = std::abs(kappa[i]);
    if (sign(kappa[i - 1]) * sign(kappa[i + 1]) > 0 && m <= std::abs(kappa[i - 1]) &&
        m <= std::abs(kappa[i + 1]) && m > 0.0) {
      auto [t, v] = numerics::golden_minimize([&](double s) { return std::abs(kappa_at(s)); }, grid[i - 1],
                                              grid[i + 1], 1e-14 * (1.0 + std::abs(grid[i])));
      if (v < kInflectionTolerance) roots.push_back(t);
    }
  }

  std::sort(roots.begin(), roots.end());
  const double merge = 1e-9 * (1.0 + c.interval().width());
  double last = -INFINITY;
  for (double t : roots) {
    if (t - last <= merge) continue;
    last = t;
    if (std::abs(kappa_at(t)) >= kInflectionTolerance) continue;
    const double kp = curvature(c, t).kappa_prime;
    (std::abs(kp) > kDegeneracyThreshold ? report.inflections : report.degenerate).push_back(t);
  }
  return report;
}

auto PointClass::describe() const -> std::string {
  switch (kind) {
    case Kind::Regular:
      return "regular";
    case Kind::Degenerate:
      return "degenerate";
    case Kind::Singular: {
      std::ostringstream os;
      os << (order == 2 ? "cusp" : "singular") << "(n=" << order << ")";
      return os.str();
    }
  }
  return "?";
}

auto classify_point(const ParamCurve& c, double t0) -> PointClass {
  const auto s = c.series(t0, 5);
  const Vec2 a1 = coefficient(s, 1);
  const Vec2 a2 = coefficient(s, 2);
  const Vec2 a3 = coefficient(s, 3);
  const Vec2 a4 = coefficient(s, 4);
  const double scale = std::max({norm(a2), norm(a3), norm(a4), 1e-300});
  if (norm(a1) > kSingularVelocity * std::max(1.0, scale)) return PointClass::regular();

  // Rotate so the lowest-order non-vanishing direction is the x-axis, then
  // the next order must carry a transverse component.
  auto germ = [&](Vec2 lead, Vec2 next, int n) -> PointClass {
    const Vec2 e1 = (1.0 / norm(lead)) * lead;
    const Vec2 e2{-e1.y, e1.x};
    const double beta = dot(next, e2);
    if (std::abs(beta) <= kGermCoefficient * scale) return PointClass::degenerate();
    return PointClass::singular(n, norm(lead), beta);
  };
  if (norm(a2) > kGermCoefficient * scale) return germ(a2, a3, 2);
  if (norm(a3) > kGermCoefficient * scale) return germ(a3, a4, 3);
  return PointClass::degenerate();
}

auto find_singular_points(const ParamCurve& c) -> SingularPoints {
  SingularPoints out;
  auto speed = [&](double t) {
    const auto s = c.fn()(t, 1);
    return std::hypot(s.x[1], s.y[1]);
  };
  const auto grid = c.grid();
  const std::size_t n = grid.size();
  std::vector<double> v(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = speed(grid[i]);
    scale = std::max(scale, v[i]);
  }
  const double tol = kSingularVelocity * std::max(1.0, scale);
  const double edge = 1e-9 * (1.0 + c.interval().width());

  if (v.front() <= tol) out.boundary.push_back(grid.front());
  if (v.back() <= tol) out.boundary.push_back(grid.back());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(v[i] <= v[i - 1] && v[i] < v[i + 1])) continue;
    auto [t, m] = numerics::golden_minimize(speed, grid[i - 1], grid[i + 1], 1e-15 * (1.0 + std::abs(grid[i])));
    if (m > tol) continue;
    if (t - grid.front() <= edge || grid.back() - t <= edge) continue;
    if (!out.interior.empty() && t - out.interior.back() <= 1e-7 * (1.0 + std::abs(t))) continue;
    out.interior.push_back(t);
  }
  return out;
}

auto reparametrize(const ParamCurve& c, const Expr& g, double s_min, double s_max) -> ParamCurve {
  ParamCurve r(
      [c, g](double s, int order) -> CurveSeries {
        const Series gs = eval_series(g, s, order);
        const auto cs = c.series(gs.value(), order);
        return {compose(cs.x, gs), compose(cs.y, gs)};
      },
      s_min, s_max, c.samples(), c.label());
  for (double s : r.grid()) (void)r.fn()(s, 0);
  return r;
}

namespace {

auto split_args(std::string_view s) -> std::vector<std::string> {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

auto trim(std::string_view s) -> std::string_view {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

}  // namespace

auto parse_curve_spec(std::string_view spec) -> ParamCurve {
  spec = trim(spec);
  const auto open = spec.find('(');
  const std::string name(trim(spec.substr(0, open)));
  std::vector<std::string> args;
  if (open != std::string_view::npos) {
    if (spec.back() != ')') throw Error("curve spec '" + std::string(spec) + "' is missing ')'");
    args = split_args(spec.substr(open + 1, spec.size() - open - 2));
    if (args.size() == 1 && trim(args[0]).empty()) args.clear();
  }
  const std::string label(spec);
  auto num = [&](std::size_t i) { return parse_constant(args.at(i)); };
  auto expect_args = [&](std::initializer_list<std::size_t> counts) {
    for (auto n : counts) {
      if (args.size() == n) return;
    }
    throw Error("wrong number of arguments in curve spec '" + label + "'");
  };
  const Expr t = Expr::variable("t", 0);
  const Expr x = Expr::variable("x", 0);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  if (name == "line") {
    expect_args({2});
    return ParamCurve::graph(Expr::number(num(0)) * x + Expr::number(num(1)), -2.0, 2.0, ParamCurve::kDefaultSamples,
                             label);
  }
  if (name == "parabola") {
    expect_args({0});
    return ParamCurve::graph(parse("x^2"), -2.0, 2.0, ParamCurve::kDefaultSamples, label);
  }
  if (name == "cubic") {
    expect_args({0});
    return ParamCurve::graph(parse("x^3"), -1.5, 1.5, ParamCurve::kDefaultSamples, label);
  }
  if (name == "sine") {
    expect_args({0});
    return ParamCurve::graph(parse("sin(x)"), 0.0, kTwoPi, ParamCurve::kDefaultSamples, label);
  }
  if (name == "circle") {
    expect_args({1, 3});
    const double r = num(0);
    const double cx = args.size() == 3 ? num(1) : 0.0;
    const double cy = args.size() == 3 ? num(2) : 0.0;
    if (!(r > 0.0)) throw Error("circle radius must be positive");
    return ParamCurve::from_exprs(Expr::number(cx) + Expr::number(r) * Expr::call(Func::Cos, t),
                                  Expr::number(cy) + Expr::number(r) * Expr::call(Func::Sin, t), 0.0, kTwoPi,
                                  ParamCurve::kDefaultSamples, label);
  }
  if (name == "ellipse") {
    expect_args({2});
    return ParamCurve::from_exprs(Expr::number(num(0)) * Expr::call(Func::Cos, t),
                                  Expr::number(num(1)) * Expr::call(Func::Sin, t), 0.0, kTwoPi,
                                  ParamCurve::kDefaultSamples, label);
  }
  if (name == "param") {
    expect_args({4});
    return ParamCurve::from_exprs(parse(args[0], {"t"}), parse(args[1], {"t"}), num(2), num(3),
                                  ParamCurve::kDefaultSamples, label);
  }
  if (name == "graph") {
    expect_args({3});
    return ParamCurve::graph(parse(args[0], {"x"}), num(1), num(2), ParamCurve::kDefaultSamples, label);
  }
  throw Error("unknown curve '" + name + "'");
}

}  // namespace legendre
