// SPDX-License-Identifier: Apache-2.0
// Minimal deterministic SVG 1.1 plotting: panels of polylines and markers.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "legendre/vec2.hpp"

namespace legendre_cli {

using legendre::Vec2;

struct Viewport {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  auto width() const noexcept -> double { return x_max - x_min; }
  auto height() const noexcept -> double { return y_max - y_min; }
  /// Throws legendre::Error unless width and height are positive and finite.
  void validate() const;
};

/// Bounding box of the finite points, grown by `margin` (a fraction of the
/// larger side). Degenerate boxes get a unit extent.
auto fit_viewport(std::span<const Vec2> points, double margin = 0.08) -> Viewport;

struct Stroke {
  std::string color = "#000000";
  double width = 1.5;
  std::string dash;  // SVG dash array, empty for solid
};

enum class Role { Primal, Dual, Envelope, Lines, Guide };

auto default_stroke(Role role) -> Stroke;

struct Polyline {
  std::vector<Vec2> points;  // non-finite points split the path
  Stroke stroke;
};

enum class MarkerKind { Cusp, Inflection, Singular, Point };

struct Marker {
  Vec2 at;
  MarkerKind kind = MarkerKind::Point;
};

struct Panel {
  std::string title;
  Viewport viewport;
  std::vector<Polyline> curves;
  std::vector<Marker> markers;
  /// Equal scale on both axes; off lets each axis fill the panel.
  bool equal_aspect = true;
  bool axes = true;
};

struct RenderSpec {
  int width = 480;   // per panel, pixels
  int height = 480;  // per panel, pixels
  Viewport viewport;
  Stroke primal = default_stroke(Role::Primal);
  Stroke dual = default_stroke(Role::Dual);
  Stroke envelope = default_stroke(Role::Envelope);
  Stroke lines = default_stroke(Role::Lines);
};

/// Panels laid out left to right. Throws legendre::Error when no panel has
/// a curve.
auto render_svg(std::span<const Panel> panels, int panel_width = 480, int panel_height = 480) -> std::string;

/// Single panel: primal curves in the primal stroke, plus markers.
auto render_svg(std::span<const std::vector<Vec2>> curves, std::span<const Marker> markers, const RenderSpec& spec)
    -> std::string;

}  // namespace legendre_cli
