// SPDX-License-Identifier: Apache-2.0
/*
  Clairaut equations solved through duality.

  Standard form  x p - y = f(p):  the singular solution is the discriminant
  curve p -> (f'(p), p f'(p) - f(p)); the other solutions are its tangent
  lines y = c x - f(c).

  General form  F(p, x p - y) = 0:  the singular solution is the curve dual
  to {F(X, Y) = 0}; solutions are the lines y = a x + b with F(a, -b) = 0.
  The zero set is supplied as a parametrization.
*/
#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"

namespace legendre {

/// Residual tolerance for a supplied zero-set parametrization.
inline constexpr double kZeroSetTolerance = 1e-9;

class ClairautProblem {
 public:
  /// x p - y = f(p), with f an expression in "p".
  static auto standard(Expr f) -> ClairautProblem;
  /// F(p, x p - y) = 0, with F an expression in "u", "v" and `zero_set` a
  /// parametrization of {F(u, v) = 0}. Throws Error when the
  /// parametrization misses the zero set.
  static auto general(Expr F, ParamCurve zero_set) -> ClairautProblem;

  auto is_general() const noexcept -> bool { return zero_set_.has_value(); }
  auto f() const -> const Expr& { return expr_; }
  auto F() const -> const Expr& { return expr_; }
  auto zero_set() const -> const ParamCurve&;

  /// ODE residual at a point of J1: x p - y - f(p), or F(p, x p - y).
  auto residual_at(double x, double y, double p) const -> double;

 private:
  ClairautProblem(Expr e, std::optional<ParamCurve> zero_set)
      : expr_(std::move(e)), zero_set_(std::move(zero_set)) {}
  Expr expr_;
  std::optional<ParamCurve> zero_set_;
};

struct LineSolution {
  double slope = 0.0;
  double intercept = 0.0;
  /// Parameter on the discriminant curve where the line touches it.
  double parameter = 0.0;

  auto at(double x) const -> double { return slope * x + intercept; }
};

struct SingularSolution {
  ParamCurve curve;
};

using ClairautSolution = std::variant<SingularSolution, LineSolution>;

/// F*(X, Y, P) = F(P, X P - Y, X) for a residual F in ("x", "y", "p").
/// The result uses the same variable slots.
auto dual_equation(const Expr& F) -> Expr;

struct Discriminant {
  ParamCurve curve;
  /// Velocity vanishes identically (affine f): the curve is one point.
  bool degenerate = false;
};

auto discriminant_curve(const ClairautProblem& pb, Interval p) -> Discriminant;

/// Standard form: lines y = c x - f(c). General form: c is a zero-set
/// parameter s and the line is y = X(s) x - Y(s).
auto line_solutions(const ClairautProblem& pb, std::span<const double> c_values) -> std::vector<LineSolution>;

/// Dual of the zero-set parametrization: the singular solution of the
/// general form.
auto general_discriminant(const ClairautProblem& pb) -> ParamCurve;

struct ResidualReport {
  double max_abs = 0.0;
  int evaluated = 0;
  /// Samples skipped because the solution has a vertical tangent there.
  std::vector<double> skipped;
};

/// For a line, samples are x values; for a singular solution, curve
/// parameters. The slope comes from the solution's own jet.
auto residual(const ClairautProblem& pb, const ClairautSolution& sol, std::span<const double> samples)
    -> ResidualReport;

inline constexpr double kEnvelopeTolerance = 1e-8;

struct EnvelopeReport {
  struct Check {
    double slope = 0.0;
    double parameter = 0.0;
    double point_error = 0.0;  // distance from disc(parameter) to the line
    double slope_error = 0.0;  // |line slope - tangent slope of disc|
    bool pass = false;
  };
  bool applicable = true;
  std::vector<Check> checks;

  auto all_pass() const -> bool;
};

auto envelope_check(const ClairautProblem& pb, std::span<const LineSolution> lines, const Discriminant& disc)
    -> EnvelopeReport;

}  // namespace legendre
