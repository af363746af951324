#include "gmt/polygon.hpp"

#include <algorithm>

#include "gmt/errors.hpp"

namespace gmt {

bool is_simple(std::span<const Point2> v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (const Point2& p : v) {
    if (!is_finite(p)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 c = v[j], d = v[(j + 1) % n];
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == n - 1;
      if (next || wrap) {
        // Shared vertex: b == c (next) or a == d (wrap). The edges may only overlap
        // there, which happens exactly when the far endpoint of one lies on the other.
        const Point2 far_ab = next ? a : b;
        const Point2 far_cd = next ? d : c;
        if (n == 3) {
          if (orient2d(v[0], v[1], v[2]) == 0) return false;
          continue;
        }
        if (on_segment(c, d, far_ab) || on_segment(a, b, far_cd)) return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

double signed_area(std::span<const Point2> v) {
  double s = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return 0.5 * s;
}

int winding_number(std::span<const Point2> v, Point2 p) {
  int wn = 0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient2d(a, b, p) > 0) ++wn;
    } else if (b.y <= p.y && orient2d(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

SimplePolygon::SimplePolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  if (!is_simple(vertices_)) throw DomainError("polygon is not simple");
  if (!(signed_area(vertices_) > 0.0)) throw DomainError("polygon must be counterclockwise");
}

SimplePolygon SimplePolygon::oriented(std::vector<Point2> vertices) {
  if (vertices.size() >= 3 && signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  return SimplePolygon(std::move(vertices));
}

}  // namespace gmt
