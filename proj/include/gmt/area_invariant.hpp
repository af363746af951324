#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gmt/polygon.hpp"

namespace gmt {

/// Integral area invariant sampled at polygon vertices: values[k] is the area of the
/// radius-r disk centred at vertex k intersected with the polygon interior. Values are
/// raw areas in [0, pi r^2], not normalized.
struct Signature {
  double radius = 0.0;
  std::vector<double> values;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact area of disk(center, r) intersected with the polygon interior.
double disk_polygon_area(const SimplePolygon& polygon, Point2 center, double r);

Signature signature(const SimplePolygon& polygon, double r);

struct MonteCarloEstimate {
  double estimate;
  double std_error;  // pi r^2 sqrt(p (1 - p) / samples)
};

// Uniform rejection sampling in the disk with a seeded mt19937_64.
MonteCarloEstimate monte_carlo_area(const SimplePolygon& polygon, Point2 center, double r, std::size_t samples,
                                    std::uint64_t seed);

// Area of the intersection of two disks with radii r and R whose centres are d apart.
double circle_intersection_area(double d, double r, double R);

namespace detail {

// Same as disk_polygon_area for vertices already known to be simple; clockwise input
// is handled by reversing.
double disk_polygon_area_unchecked(std::span<const Point2> vertices, Point2 center, double r);

// Signature of a simple vertex list in its own order (either orientation).
std::vector<double> signature_values(std::span<const Point2> vertices, double r);

}  // namespace detail

}  // namespace gmt
