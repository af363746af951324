#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmt/geometry.hpp"

namespace gmt::svg {

struct Curve {
  std::vector<Point2> points;
  bool closed = true;
  std::string stroke = "#000000";
  double width = 1.5;
  std::string css_class = "curve";
};

struct Segment {
  Point2 a;
  Point2 b;
  std::string stroke = "#000000";
  double width = 1.5;
  std::string css_class = "chain";
};

struct Fill {
  std::vector<Point2> points;
  std::string color = "#4a90d9";
  std::string css_class = "fill";
};

struct Disk {
  Point2 center;
  double radius = 0.0;
  std::string color = "#2ca02c";
};

struct Trace {
  std::vector<double> values;
  std::string stroke = "#000000";
  std::optional<std::size_t> marker;  // highlighted sample index
};

/// Everything drawn in one figure. Geometry goes in the upper panel; signature traces,
/// if any, share a sub-plot below it.
struct Scene {
  std::vector<Fill> fills;
  std::vector<Curve> curves;
  std::vector<Segment> segments;
  std::vector<Disk> disks;
  std::vector<Trace> traces;

  bool empty() const {
    return fills.empty() && curves.empty() && segments.empty() && disks.empty() && traces.empty();
  }
};

// Deterministic SVG text: the view box is the geometry bounding box plus a 5% margin,
// elements are written in scene order, fills at 40% opacity.
std::string emit_svg(const Scene& scene);

}  // namespace gmt::svg
