#include "gmt/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gmt {
namespace {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  e = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& d, double& e) {
  d = a - b;
  const double bv = a - d;
  const double av = d + bv;
  e = (a - av) + (bv - b);
}

inline void two_product(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Adds b into the nonoverlapping expansion h[0..n), increasing magnitude, zeros
// eliminated. Returns the new length.
int grow_expansion(double* h, int n, double b) {
  double q = b;
  int out = 0;
  for (int i = 0; i < n; ++i) {
    double sum, err;
    two_sum(q, h[i], sum, err);
    q = sum;
    if (err != 0.0) h[out++] = err;
  }
  if (q != 0.0 || out == 0) h[out++] = q;
  return out;
}

int orient2d_exact(Point2 a, Point2 b, Point2 c) {
  double acx, acx_e, bcy, bcy_e, acy, acy_e, bcx, bcx_e;
  two_diff(a.x, c.x, acx, acx_e);
  two_diff(b.y, c.y, bcy, bcy_e);
  two_diff(a.y, c.y, acy, acy_e);
  two_diff(b.x, c.x, bcx, bcx_e);

  const std::array<double, 2> lx{acx, acx_e};
  const std::array<double, 2> ly{bcy, bcy_e};
  const std::array<double, 2> rx{acy, acy_e};
  const std::array<double, 2> ry{bcx, bcx_e};

  std::array<double, 32> h{};
  int n = 0;
  for (double u : lx) {
    for (double v : ly) {
      double p, e;
      two_product(u, v, p, e);
      n = grow_expansion(h.data(), n, e);
      n = grow_expansion(h.data(), n, p);
    }
  }
  for (double u : rx) {
    for (double v : ry) {
      double p, e;
      two_product(u, v, p, e);
      n = grow_expansion(h.data(), n, -e);
      n = grow_expansion(h.data(), n, -p);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    if (h[i] > 0.0) return 1;
    if (h[i] < 0.0) return -1;
  }
  return 0;
}

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient2d_exact(a, b, c);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient2d(a, b, c);
  const int o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a);
  const int o4 = orient2d(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace gmt
