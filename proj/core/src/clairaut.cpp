// SPDX-License-Identifier: Apache-2.0
#include "legendre/clairaut.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "legendre/duality.hpp"
#include "legendre/error.hpp"
#include "legendre/jet_space.hpp"

namespace legendre {

namespace {

auto eval2(const Expr& F, double u, double v) -> double {
  const std::array<double, 2> vars{u, v};
  return evaluate(F, std::span<const double>(vars));
}

}  // namespace

auto ClairautProblem::standard(Expr f) -> ClairautProblem {
  if (f.max_variable_index() > 0) throw Error("Clairaut right-hand side must be an expression in p");
  return ClairautProblem(std::move(f), std::nullopt);
}

auto ClairautProblem::general(Expr F, ParamCurve zero_set) -> ClairautProblem {
  if (F.max_variable_index() > 1) throw Error("general Clairaut residual must be an expression in u, v");
  for (double s : zero_set.grid()) {
    const Vec2 pt = zero_set.position(s);
    const double r = eval2(F, pt.x, pt.y);
    if (!(std::abs(r) < kZeroSetTolerance)) {
      std::ostringstream os;
      os << "zero-set parametrization misses F = 0: |F| = " << std::abs(r) << " at s = " << s;
      throw Error(os.str());
    }
  }
  return ClairautProblem(std::move(F), std::move(zero_set));
}

auto ClairautProblem::zero_set() const -> const ParamCurve& {
  if (!zero_set_) throw Error("standard Clairaut problem has no zero set");
  return *zero_set_;
}

auto ClairautProblem::residual_at(double x, double y, double p) const -> double {
  if (is_general()) return eval2(expr_, p, x * p - y);
  return x * p - y - eval_value(expr_, p);
}

auto dual_equation(const Expr& F) -> Expr {
  const Expr X = Expr::variable("x", 0);
  const Expr Y = Expr::variable("y", 1);
  const Expr P = Expr::variable("p", 2);
  const std::array<Expr, 3> replacement{P, X * P - Y, X};
  return substitute(F, replacement);
}

auto discriminant_curve(const ClairautProblem& pb, Interval p) -> Discriminant {
  if (pb.is_general()) return {general_discriminant(pb), false};
  const Expr f = pb.f();
  ParamCurve curve(
      [f](double s, int order) -> CurveSeries {
        const Series fs = eval_series(f, s, order + 1);
        const Series fp = fs.differentiated();
        const Series ps = Series::variable(s, order);
        return {fp, ps * fp - fs.truncated(order)};
      },
      p.lo, p.hi, ParamCurve::kDefaultSamples, "discriminant of x p - y = " + f.to_string());
  bool degenerate = true;
  for (double s : curve.grid(257)) {
    const auto jet = point_jet(curve, s);
    if (norm(jet.velocity) > 1e-12 * (1.0 + norm(jet.position))) {
      degenerate = false;
      break;
    }
  }
  return {curve, degenerate};
}

auto line_solutions(const ClairautProblem& pb, std::span<const double> c_values) -> std::vector<LineSolution> {
  std::vector<LineSolution> lines;
  lines.reserve(c_values.size());
  for (double c : c_values) {
    if (pb.is_general()) {
      const Vec2 z = pb.zero_set().position(c);
      lines.push_back({z.x, -z.y, c});
    } else {
      lines.push_back({c, -eval_value(pb.f(), c), c});
    }
  }
  return lines;
}

auto general_discriminant(const ClairautProblem& pb) -> ParamCurve {
  return dual_curve(pb.zero_set()).with_label("singular solution of " + pb.F().to_string() + " = 0");
}

auto residual(const ClairautProblem& pb, const ClairautSolution& sol, std::span<const double> samples)
    -> ResidualReport {
  ResidualReport report;
  for (double s : samples) {
    double r = 0.0;
    if (const auto* line = std::get_if<LineSolution>(&sol)) {
      r = pb.residual_at(s, line->at(s), line->slope);
    } else {
      const auto& curve = std::get<SingularSolution>(sol).curve;
      const J1Point pt = lift_point(curve, s);
      if (pt.chart == Chart::Q && pt.slope == 0.0) {
        report.skipped.push_back(s);
        continue;
      }
      const J1Point p = pt.in_chart(Chart::P);
      r = pb.residual_at(p.x, p.y, p.slope);
    }
    report.max_abs = std::max(report.max_abs, std::abs(r));
    ++report.evaluated;
  }
  return report;
}

auto EnvelopeReport::all_pass() const -> bool {
  if (!applicable) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

auto envelope_check(const ClairautProblem& pb, std::span<const LineSolution> lines, const Discriminant& disc)
    -> EnvelopeReport {
  (void)pb;
  EnvelopeReport report;
  if (disc.degenerate) {
    report.applicable = false;
    return report;
  }
  for (const auto& line : lines) {
    EnvelopeReport::Check check;
    check.slope = line.slope;
    check.parameter = line.parameter;
    const J1Point pt = lift_point(disc.curve, line.parameter);
    check.point_error = std::abs(line.at(pt.x) - pt.y) / std::sqrt(1.0 + line.slope * line.slope);
    if (pt.chart == Chart::P) {
      check.slope_error = std::abs(pt.slope - line.slope);
    } else {
      // Compare co-slopes when the tangent is steep.
      check.slope_error = line.slope == 0.0 ? INFINITY : std::abs(pt.slope - 1.0 / line.slope);
    }
    check.pass = check.point_error < kEnvelopeTolerance && check.slope_error < kEnvelopeTolerance;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace legendre
