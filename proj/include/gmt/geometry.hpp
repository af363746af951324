#pragma once

#include <cmath>

namespace gmt {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Sign of the orientation determinant of (a, b, c): +1 counterclockwise, -1 clockwise,
// 0 collinear. Exact for all finite double inputs (floating-point filter with an
// expansion-arithmetic fallback).
int orient2d(Point2 a, Point2 b, Point2 c);

// Twice the signed area of triangle (a, b, c), plain floating point.
inline double signed_area2(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

// True when p lies on the closed segment [a, b]. Exact.
bool on_segment(Point2 a, Point2 b, Point2 p);

// True when closed segments [a, b] and [c, d] share at least one point. Exact.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace gmt
