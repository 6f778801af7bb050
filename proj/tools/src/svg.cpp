// SPDX-License-Identifier: Apache-2.0
#include "legendre_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "legendre/error.hpp"

namespace legendre_cli {

namespace {

constexpr double kTitleBand = 22.0;
constexpr double kPad = 10.0;

auto num(double v) -> std::string {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

auto escape(const std::string& text) -> std::string {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Frame {
  double ox, oy;  // pixel origin of the plot area
  double sx, sy;  // pixels per unit
  double w, h;    // plot area in pixels
  Viewport vp;

  auto map(Vec2 p) const -> Vec2 { return {ox + (p.x - vp.x_min) * sx, oy + h - (p.y - vp.y_min) * sy}; }
};

auto make_frame(const Panel& panel, double left, int pw, int ph) -> Frame {
  const Viewport& vp = panel.viewport;
  Frame f{left + kPad, kTitleBand, 0, 0, pw - 2 * kPad, ph - kTitleBand - kPad, vp};
  f.sx = f.w / vp.width();
  f.sy = f.h / vp.height();
  if (panel.equal_aspect) {
    const double s = std::min(f.sx, f.sy);
    f.ox += (f.w - s * vp.width()) / 2;
    f.oy += (f.h - s * vp.height()) / 2;
    f.w = s * vp.width();
    f.h = s * vp.height();
    f.sx = f.sy = s;
  }
  return f;
}

void emit_path(std::ostringstream& os, const Frame& f, const Polyline& line) {
  // Points far outside the frame would only bloat the file; they break the path.
  const double reach = 4.0 * std::max(f.w, f.h);
  std::string d;
  bool pen_down = false;
  for (const Vec2& p : line.points) {
    const Vec2 q = f.map(p);
    const bool ok = std::isfinite(q.x) && std::isfinite(q.y) && std::abs(q.x - f.ox) < reach &&
                    std::abs(q.y - f.oy) < reach;
    if (!ok) {
      pen_down = false;
      continue;
    }
    d += pen_down ? " L" : (d.empty() ? "M" : " M");
    d += num(q.x) + " " + num(q.y);
    pen_down = true;
  }
  if (d.empty()) return;
  os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << line.stroke.color << "\" stroke-width=\""
     << num(line.stroke.width) << "\"";
  if (!line.stroke.dash.empty()) os << " stroke-dasharray=\"" << line.stroke.dash << "\"";
  os << " stroke-linejoin=\"round\"/>\n";
}

void emit_marker(std::ostringstream& os, const Frame& f, const Marker& m) {
  const Vec2 q = f.map(m.at);
  if (!std::isfinite(q.x) || !std::isfinite(q.y)) return;
  switch (m.kind) {
    case MarkerKind::Cusp:
      os << "<circle class=\"cusp\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
         << "\" r=\"4.00\" fill=\"#d62728\" stroke=\"none\"/>\n";
      break;
    case MarkerKind::Inflection:
      os << "<circle class=\"inflection\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
         << "\" r=\"4.00\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.50\"/>\n";
      break;
    case MarkerKind::Singular:
      os << "<rect class=\"singular\" x=\"" << num(q.x - 4) << "\" y=\"" << num(q.y - 4)
         << "\" width=\"8.00\" height=\"8.00\" fill=\"#9467bd\" stroke=\"none\"/>\n";
      break;
    case MarkerKind::Point:
      os << "<circle class=\"point\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
         << "\" r=\"2.50\" fill=\"#000000\" stroke=\"none\"/>\n";
      break;
  }
}

}  // namespace

void Viewport::validate() const {
  if (!(std::isfinite(width()) && std::isfinite(height()) && width() > 0 && height() > 0)) {
    throw legendre::Error("viewport must have positive finite width and height");
  }
}

auto fit_viewport(std::span<const Vec2> points, double margin) -> Viewport {
  Viewport vp{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const Vec2& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
    vp.x_min = std::min(vp.x_min, p.x);
    vp.x_max = std::max(vp.x_max, p.x);
    vp.y_min = std::min(vp.y_min, p.y);
    vp.y_max = std::max(vp.y_max, p.y);
  }
  if (!(vp.x_min <= vp.x_max)) return {};
  const double side = std::max({vp.width(), vp.height(), 1e-9});
  const double grow = margin * side;
  auto widen = [&](double& lo, double& hi) {
    if (hi - lo < 1e-9 * side) {
      lo -= 0.5;
      hi += 0.5;
    }
    lo -= grow;
    hi += grow;
  };
  widen(vp.x_min, vp.x_max);
  widen(vp.y_min, vp.y_max);
  return vp;
}

auto default_stroke(Role role) -> Stroke {
  switch (role) {
    case Role::Primal: return {"#1f3b73", 1.6, ""};
    case Role::Dual: return {"#c0392b", 1.6, ""};
    case Role::Envelope: return {"#111111", 2.2, ""};
    case Role::Lines: return {"#7f8c8d", 0.6, ""};
    case Role::Guide: return {"#888888", 1.0, "3 3"};
  }
  return {};
}

auto render_svg(std::span<const Panel> panels, int panel_width, int panel_height) -> std::string {
  const bool any_curve = std::any_of(panels.begin(), panels.end(), [](const Panel& p) {
    return std::any_of(p.curves.begin(), p.curves.end(), [](const Polyline& l) { return !l.points.empty(); });
  });
  if (!any_curve) throw legendre::Error("nothing to render: no curves");
  if (panel_width < 64 || panel_height < 64) throw legendre::Error("panel size must be at least 64 pixels");

  const int total_width = panel_width * static_cast<int>(panels.size());
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total_width << "\" height=\""
     << panel_height << "\" viewBox=\"0 0 " << total_width << " " << panel_height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << total_width << "\" height=\"" << panel_height
     << "\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel& panel = panels[i];
    panel.viewport.validate();
    const double left = static_cast<double>(panel_width) * static_cast<double>(i);
    const Frame f = make_frame(panel, left, panel_width, panel_height);
    os << "<g id=\"panel" << i << "\">\n";
    os << "<clipPath id=\"clip" << i << "\"><rect x=\"" << num(f.ox) << "\" y=\"" << num(f.oy) << "\" width=\""
       << num(f.w) << "\" height=\"" << num(f.h) << "\"/></clipPath>\n";
    if (!panel.title.empty()) {
      os << "<text x=\"" << num(left + panel_width / 2.0) << "\" y=\"15.00\" text-anchor=\"middle\" "
         << "font-family=\"sans-serif\" font-size=\"12\">" << escape(panel.title) << "</text>\n";
    }
    os << "<g clip-path=\"url(#clip" << i << ")\">\n";
    if (panel.axes) {
      const Stroke axis{"#cccccc", 0.8, ""};
      const Viewport& vp = panel.viewport;
      if (vp.y_min <= 0 && 0 <= vp.y_max) emit_path(os, f, {{{vp.x_min, 0}, {vp.x_max, 0}}, axis});
      if (vp.x_min <= 0 && 0 <= vp.x_max) emit_path(os, f, {{{0, vp.y_min}, {0, vp.y_max}}, axis});
    }
    for (const Polyline& line : panel.curves) emit_path(os, f, line);
    for (const Marker& m : panel.markers) emit_marker(os, f, m);
    os << "</g>\n</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

auto render_svg(std::span<const std::vector<Vec2>> curves, std::span<const Marker> markers, const RenderSpec& spec)
    -> std::string {
  if (curves.empty()) throw legendre::Error("nothing to render: no curves");
  Panel panel;
  panel.viewport = spec.viewport;
  for (const auto& c : curves) panel.curves.push_back({c, spec.primal});
  panel.markers.assign(markers.begin(), markers.end());
  const std::vector<Panel> panels{panel};
  return render_svg(panels, spec.width, spec.height);
}

}  // namespace legendre_cli
