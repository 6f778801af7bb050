// SPDX-License-Identifier: Apache-2.0
#include "legendre/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "legendre/error.hpp"
#include "legendre/numerics.hpp"

namespace legendre {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Supremum of sign * (x p - f(x)) over an interval, answered for any p from
// one cached sampling of f.
class SupEvaluator {
 public:
  SupEvaluator(ScalarFn f, Interval x, double sign, const ConjugateOptions& options)
      : f_(std::move(f)), x_(x), sign_(sign), refine_width_(options.refine_width) {
    if (options.grid_points < 3) throw Error("conjugate grid needs at least 3 points");
    if (!(x.lo < x.hi)) throw Error("conjugate interval must satisfy lo < hi");
    xs_ = linspace(x.lo, x.hi, options.grid_points);
    fs_.resize(xs_.size());
    for (std::size_t i = 0; i < xs_.size(); ++i) fs_[i] = f_(xs_[i]);
    cell_ = x.width() / static_cast<double>(xs_.size() - 1);
  }

  auto operator()(double p) const -> std::pair<ExtendedReal, double> {
    auto objective = [&](double x, double fx) {
      return std::isfinite(fx) ? sign_ * (x * p - fx) : kNegInf;
    };
    std::size_t best = 0;
    double best_value = kNegInf;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      const double v = objective(xs_[i], fs_[i]);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    if (best_value == kNegInf) throw Error("conjugate undefined: f is +infinity on the whole interval");
    const double lo = xs_[best == 0 ? 0 : best - 1];
    const double hi = xs_[std::min(best + 1, xs_.size() - 1)];
    auto [x_star, refined] =
        numerics::golden_maximize([&](double x) { return objective(x, f_(x)); }, lo, hi, refine_width_);
    if (refined < best_value) {
      refined = best_value;
      x_star = xs_[best];
    }
    // No interior critical point: the supremum escapes through an end.
    if (x_star - x_.lo <= cell_ || x_.hi - x_star <= cell_) {
      return {ExtendedReal::plus_infinity(), std::numeric_limits<double>::quiet_NaN()};
    }
    return {ExtendedReal::finite(refined), x_star};
  }

 private:
  ScalarFn f_;
  Interval x_;
  double sign_;
  double refine_width_;
  double cell_ = 0.0;
  std::vector<double> xs_;
  std::vector<double> fs_;
};

auto run(const SupEvaluator& sup, std::span<const double> p_grid) -> ConjugateResult {
  if (p_grid.empty()) throw Error("empty p grid");
  ConjugateResult out;
  out.grid.assign(p_grid.begin(), p_grid.end());
  out.values.reserve(p_grid.size());
  out.argmax.reserve(p_grid.size());
  for (double p : p_grid) {
    auto [value, arg] = sup(p);
    out.values.push_back(value);
    out.argmax.push_back(arg);
  }
  out.effective_domain = effective_domain(out.grid, out.values);
  return out;
}

auto expr_fn(const Expr& f) -> ScalarFn {
  return [f](double x) { return eval_value(f, x); };
}

// Requires sign * f'' > 0 at every probe.
void check_curvature_sign(const Expr& f, Interval x, double sign, int probes, const char* what) {
  if (!(x.lo < x.hi)) throw Error("conjugate interval must satisfy lo < hi");
  for (double t : linspace(x.lo, x.hi, std::max(probes, 2))) {
    const double f2 = eval_jet(f, t).d2;
    if (!(sign * f2 > 0.0)) {
      std::ostringstream os;
      os << "f is not strictly " << what << " on [" << x.lo << ", " << x.hi << "]: f''(" << t << ") = " << f2;
      throw Error(os.str());
    }
  }
}

}  // namespace

auto ExtendedReal::value() const -> double {
  if (infinite_) throw Error("value is +infinity");
  return value_;
}

auto ExtendedReal::to_double() const noexcept -> double {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

auto linspace(double lo, double hi, int n) -> std::vector<double> {
  std::vector<double> v(static_cast<std::size_t>(std::max(n, 1)));
  if (v.size() == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (hi - lo) / static_cast<double>(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

auto effective_domain(std::span<const double> grid, std::span<const ExtendedReal> values) -> std::vector<Interval> {
  std::vector<Interval> runs;
  bool open = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i].is_finite()) {
      if (!open) runs.push_back({grid[i], grid[i]});
      runs.back().hi = grid[i];
      open = true;
    } else {
      open = false;
    }
  }
  return runs;
}

auto conjugate_sup(const Expr& f, Interval x, std::span<const double> p_grid, const ConjugateOptions& options)
    -> ConjugateResult {
  check_curvature_sign(f, x, 1.0, options.convexity_probes, "convex");
  return run(SupEvaluator(expr_fn(f), x, 1.0, options), p_grid);
}

auto conjugate_concave(const Expr& f, Interval x, std::span<const double> p_grid, const ConjugateOptions& options)
    -> ConjugateResult {
  check_curvature_sign(f, x, -1.0, options.convexity_probes, "concave");
  return run(SupEvaluator(expr_fn(f), x, -1.0, options), p_grid);
}

auto conjugate_sup(const ScalarFn& f, Interval x, std::span<const double> p_grid, const ConjugateOptions& options)
    -> ConjugateResult {
  return run(SupEvaluator(f, x, 1.0, options), p_grid);
}

auto conjugate_param(const Expr& f, Interval t) -> ParamCurve {
  const auto probes = linspace(t.lo, t.hi, 513);
  double previous = eval_jet(f, probes.front()).d2;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const double f2 = eval_jet(f, probes[i]).d2;
    double where = std::numeric_limits<double>::quiet_NaN();
    if (f2 == 0.0) {
      where = probes[i];
    } else if ((f2 > 0.0) != (previous > 0.0) && previous != 0.0) {
      where = numerics::bisect([&](double s) { return eval_jet(f, s).d2; }, probes[i - 1], probes[i], 1e-14);
    }
    if (!std::isnan(where)) {
      std::ostringstream os;
      os << "f'' vanishes in the interval: inflection near x = " << where;
      throw Error(os.str());
    }
    previous = f2;
  }
  return ParamCurve(
      [f](double s, int order) -> CurveSeries {
        const Series fs = eval_series(f, s, order + 1);
        const Series fp = fs.differentiated();
        const Series ts = Series::variable(s, order);
        return {fp, ts * fp - fs.truncated(order)};
      },
      t.lo, t.hi, ParamCurve::kDefaultSamples, "conjugate of " + f.to_string());
}

auto biconjugate(const Expr& f, Interval x, Interval p, std::span<const double> x_eval,
                 const ConjugateOptions& options) -> ConjugateResult {
  check_curvature_sign(f, x, 1.0, options.convexity_probes, "convex");
  const SupEvaluator inner(expr_fn(f), x, 1.0, options);
  const ScalarFn f_star = [inner](double q) { return inner(q).first.to_double(); };
  return run(SupEvaluator(f_star, p, 1.0, options), x_eval);
}

}  // namespace legendre
