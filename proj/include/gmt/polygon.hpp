#pragma once

#include <span>
#include <vector>

#include "gmt/geometry.hpp"

namespace gmt {

// Pairwise segment test with exact predicates: no zero-length edge, non-adjacent edges
// disjoint, adjacent edges meeting only at their shared vertex. False for N < 3.
bool is_simple(std::span<const Point2> vertices);

double signed_area(std::span<const Point2> vertices);

// Winding number of the closed polygon around p; p must not lie on the boundary for
// the value to be meaningful.
int winding_number(std::span<const Point2> vertices, Point2 p);

/// Simple polygon with counterclockwise vertex order, implicitly closed.
class SimplePolygon {
 public:
  // Throws DomainError unless the vertices form a simple counterclockwise polygon.
  explicit SimplePolygon(std::vector<Point2> vertices);

  // Accepts clockwise input by reversing it.
  static SimplePolygon oriented(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double area() const { return signed_area(vertices_); }
  bool contains(Point2 p) const { return winding_number(vertices_, p) != 0; }

 private:
  std::vector<Point2> vertices_;
};

}  // namespace gmt
