// SPDX-License-Identifier: Apache-2.0
/*
  Legendre transformation of functions of one variable.

  For strictly convex f on an interval, f*(p) = sup_x (x p - f(x)); for
  strictly concave f, f*(p) = sup_x (f(x) - x p). The supremum is taken over
  a uniform grid and refined by golden-section ascent around the best grid
  point. When the best point lies within one grid cell of an end of the
  interval the objective has no interior critical point and the value is
  +infinity.
*/
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"

namespace legendre {

/// A real number or +infinity.
class ExtendedReal {
 public:
  static auto finite(double v) -> ExtendedReal { return ExtendedReal(v, false); }
  static auto plus_infinity() -> ExtendedReal { return ExtendedReal(0.0, true); }

  auto is_finite() const noexcept -> bool { return !infinite_; }
  /// Throws Error for +infinity.
  auto value() const -> double;
  /// IEEE representation (+inf for infinity), for printing and plotting.
  auto to_double() const noexcept -> double;

  friend auto operator==(const ExtendedReal&, const ExtendedReal&) -> bool = default;

 private:
  ExtendedReal(double v, bool infinite) : value_(v), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

struct ConjugateResult {
  std::vector<double> grid;
  std::vector<ExtendedReal> values;
  /// Maximal runs of consecutive grid points with finite values.
  std::vector<Interval> effective_domain;
  /// Maximizer for each finite value (NaN where infinite).
  std::vector<double> argmax;
};

struct ConjugateOptions {
  int grid_points = 4096;
  double refine_width = 1e-10;
  int convexity_probes = 513;
};

using ScalarFn = std::function<double(double)>;

/// Convex conjugate of an expression in x. Throws Error listing the first
/// probe where f'' <= 0.
auto conjugate_sup(const Expr& f, Interval x, std::span<const double> p_grid, const ConjugateOptions& options = {})
    -> ConjugateResult;

/// Concave variant sup_x (f(x) - x p).
auto conjugate_concave(const Expr& f, Interval x, std::span<const double> p_grid,
                       const ConjugateOptions& options = {}) -> ConjugateResult;

/// Convex conjugate of an arbitrary callable; convexity is the caller's
/// responsibility. Non-finite values of f are treated as +infinity.
auto conjugate_sup(const ScalarFn& f, Interval x, std::span<const double> p_grid,
                   const ConjugateOptions& options = {}) -> ConjugateResult;

/// Derivative-parametrized conjugate t -> (f'(t), t f'(t) - f(t)). Throws
/// Error naming the inflection when f'' changes sign or vanishes.
auto conjugate_param(const Expr& f, Interval t) -> ParamCurve;

/// (f*)* on x_eval, with f* itself computed by the sup formula over
/// p_interval.
auto biconjugate(const Expr& f, Interval x, Interval p, std::span<const double> x_eval,
                 const ConjugateOptions& options = {}) -> ConjugateResult;

auto effective_domain(std::span<const double> grid, std::span<const ExtendedReal> values) -> std::vector<Interval>;

auto linspace(double lo, double hi, int n) -> std::vector<double>;

}  // namespace legendre
