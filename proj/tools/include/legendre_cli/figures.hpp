// SPDX-License-Identifier: Apache-2.0
// Catalog of reproducible figures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre_cli/svg.hpp"

namespace legendre_cli {

struct FigureOptions {
  /// Upper end of the sine interval for fig-sine-dual; unset draws the
  /// 2 pi, 4 pi, 7 pi strip.
  std::optional<double> range;
};

auto figure_ids() -> const std::vector<std::string>&;

/// Throws legendre::Error for an unknown id.
auto build_figure(const std::string& id, const FigureOptions& options) -> std::vector<Panel>;
auto render_figure(const std::string& id, const FigureOptions& options) -> std::string;

/// Samples a curve on its grid; parameters that fail to evaluate become
/// NaN points so the drawn path breaks there.
auto polyline_points(const legendre::ParamCurve& c, int n) -> std::vector<Vec2>;

/// Cusp / singular markers for every singular point of c that classifies as
/// a germ of order 2 or 3, interior points only unless `boundary` is set.
auto singular_markers(const legendre::ParamCurve& c, bool boundary) -> std::vector<Marker>;

}  // namespace legendre_cli
