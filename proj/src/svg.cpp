#include "gmt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gmt/errors.hpp"
#include "gmt/io.hpp"

namespace gmt::svg {
namespace {

constexpr double kWidth = 800.0;
constexpr double kTraceHeight = 200.0;

std::string num(double v) { return io::fixed(v, 3); }

struct Frame {
  double x0, y1, scale;
  double px(Point2 p) const { return (p.x - x0) * scale; }
  double py(Point2 p) const { return (y1 - p.y) * scale; }
};

}  // namespace

std::string emit_svg(const Scene& scene) {
  std::ostringstream out;
  const char* header = "<svg xmlns=\"http://www.w3.org/2000/svg\"";
  if (scene.empty()) {
    out << header << " width=\"1\" height=\"1\" viewBox=\"0 0 1 1\"></svg>\n";
    return out.str();
  }

  double minx = std::numeric_limits<double>::infinity(), miny = minx;
  double maxx = -minx, maxy = -minx;
  auto grow = [&](Point2 p) {
    if (!is_finite(p)) throw DomainError("SVG scene has a non-finite coordinate");
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  };
  for (const auto& f : scene.fills) std::for_each(f.points.begin(), f.points.end(), grow);
  for (const auto& c : scene.curves) std::for_each(c.points.begin(), c.points.end(), grow);
  for (const auto& s : scene.segments) {
    grow(s.a);
    grow(s.b);
  }
  for (const auto& d : scene.disks) {
    grow({d.center.x - d.radius, d.center.y - d.radius});
    grow({d.center.x + d.radius, d.center.y + d.radius});
  }

  double panel_height = 0.0;
  Frame frame{0.0, 0.0, 1.0};
  const bool has_geometry = minx <= maxx;
  if (has_geometry) {
    double w = maxx - minx, h = maxy - miny;
    const double span = std::max({w, h, 1e-12});
    w = std::max(w, 1e-3 * span);
    h = std::max(h, 1e-3 * span);
    const double mx = 0.05 * w, my = 0.05 * h;
    frame = {minx - mx, maxy + my, kWidth / (w + 2.0 * mx)};
    panel_height = (h + 2.0 * my) * frame.scale;
  }
  const double total_height = panel_height + (scene.traces.empty() ? 0.0 : kTraceHeight);

  out << header << " width=\"" << num(kWidth) << "\" height=\"" << num(total_height) << "\" viewBox=\"0 0 "
      << num(kWidth) << ' ' << num(total_height) << "\">\n";

  auto points_attr = [&](const std::vector<Point2>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += num(frame.px(pts[i])) + "," + num(frame.py(pts[i]));
    }
    return s;
  };

  for (const auto& f : scene.fills) {
    out << "  <polygon class=\"" << f.css_class << "\" points=\"" << points_attr(f.points) << "\" fill=\""
        << f.color << "\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
  }
  for (const auto& d : scene.disks) {
    out << "  <circle class=\"disk\" cx=\"" << num(frame.px(d.center)) << "\" cy=\"" << num(frame.py(d.center))
        << "\" r=\"" << num(d.radius * frame.scale) << "\" fill=\"" << d.color
        << "\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
  }
  for (const auto& c : scene.curves) {
    out << "  <" << (c.closed ? "polygon" : "polyline") << " class=\"" << c.css_class << "\" points=\""
        << points_attr(c.points) << "\" fill=\"none\" stroke=\"" << c.stroke << "\" stroke-width=\"" << num(c.width)
        << "\"/>\n";
  }
  for (const auto& s : scene.segments) {
    out << "  <line class=\"" << s.css_class << "\" x1=\"" << num(frame.px(s.a)) << "\" y1=\"" << num(frame.py(s.a))
        << "\" x2=\"" << num(frame.px(s.b)) << "\" y2=\"" << num(frame.py(s.b)) << "\" stroke=\"" << s.stroke
        << "\" stroke-width=\"" << num(s.width) << "\"/>\n";
  }

  if (!scene.traces.empty()) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& t : scene.traces) {
      for (double v : t.values) {
        if (!std::isfinite(v)) throw DomainError("SVG trace has a non-finite value");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!(lo <= hi)) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double top = panel_height + 10.0, bottom = panel_height + kTraceHeight - 10.0;
    auto tx = [](std::size_t i, std::size_t n) { return n > 1 ? 10.0 + (kWidth - 20.0) * i / (n - 1) : kWidth / 2; };
    auto ty = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };
    out << "  <rect class=\"trace-panel\" x=\"0.000\" y=\"" << num(panel_height) << "\" width=\"" << num(kWidth)
        << "\" height=\"" << num(kTraceHeight) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    for (const auto& t : scene.traces) {
      out << "  <polyline class=\"trace\" points=\"";
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (i) out << ' ';
        out << num(tx(i, t.values.size())) << ',' << num(ty(t.values[i]));
      }
      out << "\" fill=\"none\" stroke=\"" << t.stroke << "\" stroke-width=\"1.500\"/>\n";
      if (t.marker && *t.marker < t.values.size()) {
        out << "  <circle class=\"trace-marker\" cx=\"" << num(tx(*t.marker, t.values.size())) << "\" cy=\""
            << num(ty(t.values[*t.marker])) << "\" r=\"4.000\" fill=\"#2ca02c\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gmt::svg
