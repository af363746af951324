#include "gmt/area_invariant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gmt/errors.hpp"

namespace gmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTangentTolerance = 1e-14;
constexpr double kRootSlack = 1e-12;

// Area of disk(0, r) intersected with a counterclockwise simple polygon whose
// coordinates are already relative to the disk centre, by Green's theorem: the region
// boundary is made of polygon pieces inside the disk and circle arcs inside the
// polygon, and its area is half the circulation of x dy - y dx.
double clipped_area_ccw(std::span<const Point2> v, double r) {
  const std::size_t n = v.size();
  const double r2 = r * r;
  double twice_area = 0.0;
  std::vector<double> crossings;

  double ts[4];
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = v[i];
    const Point2 d = v[(i + 1) % n] - p;
    const double a = dot(d, d);
    const double b = dot(p, d);  // half the linear coefficient
    const double c = dot(p, p) - r2;
    int count = 0;
    ts[count++] = 0.0;
    const double disc = b * b - a * c;
    if (disc / (a * r2) > kTangentTolerance) {
      const double sq = std::sqrt(disc);
      const double q = -(b + std::copysign(sq, b));
      double roots[2] = {q / a, q != 0.0 ? c / q : -q / a};
      if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);
      for (double t : roots) {
        if (t < -kRootSlack || t > 1.0 + kRootSlack) continue;
        t = std::clamp(t, 0.0, 1.0);
        const Point2 x = p + t * d;
        crossings.push_back(std::atan2(x.y, x.x));
        if (t > 0.0 && t < 1.0) ts[count++] = t;
      }
    }
    ts[count++] = 1.0;
    for (int k = 0; k + 1 < count; ++k) {
      const double t0 = ts[k], t1 = ts[k + 1];
      if (t1 <= t0) continue;
      const Point2 mid = p + (0.5 * (t0 + t1)) * d;
      if (dot(mid, mid) >= r2) continue;
      twice_area += cross(p + t0 * d, p + t1 * d);
    }
  }

  if (crossings.empty()) {
    if (winding_number(v, Point2{r, 0.0}) != 0) twice_area += 2.0 * kPi * r2;
    return 0.5 * twice_area;
  }

  std::sort(crossings.begin(), crossings.end());
  const std::size_t m = crossings.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double start = crossings[k];
    const double end = k + 1 < m ? crossings[k + 1] : crossings.front() + 2.0 * kPi;
    const double span = end - start;
    if (span <= 0.0) continue;
    const double mid = start + 0.5 * span;
    if (winding_number(v, Point2{r * std::cos(mid), r * std::sin(mid)}) != 0) twice_area += r2 * span;
  }
  return 0.5 * twice_area;
}

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radius must be positive and finite");
}

}  // namespace

namespace detail {

double disk_polygon_area_unchecked(std::span<const Point2> vertices, Point2 center, double r) {
  std::vector<Point2> local;
  local.reserve(vertices.size());
  for (const Point2& p : vertices) local.push_back(p - center);
  if (signed_area(local) < 0.0) std::reverse(local.begin(), local.end());
  return std::clamp(clipped_area_ccw(local, r), 0.0, kPi * r * r);
}

std::vector<double> signature_values(std::span<const Point2> vertices, double r) {
  std::vector<double> out;
  out.reserve(vertices.size());
  for (const Point2& c : vertices) out.push_back(disk_polygon_area_unchecked(vertices, c, r));
  return out;
}

}  // namespace detail

double disk_polygon_area(const SimplePolygon& polygon, Point2 center, double r) {
  check_radius(r);
  if (!is_finite(center)) throw DomainError("disk centre must be finite");
  return detail::disk_polygon_area_unchecked(polygon.vertices(), center, r);
}

Signature signature(const SimplePolygon& polygon, double r) {
  check_radius(r);
  return Signature{r, detail::signature_values(polygon.vertices(), r)};
}

MonteCarloEstimate monte_carlo_area(const SimplePolygon& polygon, Point2 center, double r, std::size_t samples,
                                    std::uint64_t seed) {
  check_radius(r);
  if (samples == 0) throw DomainError("monte_carlo_area needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::size_t hits = 0;
  for (std::size_t drawn = 0; drawn < samples;) {
    const double u = unit(rng), w = unit(rng);
    if (u * u + w * w >= 1.0) continue;
    ++drawn;
    if (polygon.contains(Point2{center.x + r * u, center.y + r * w})) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double disk = kPi * r * r;
  return {disk * p, disk * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

double circle_intersection_area(double d, double r, double R) {
  if (!(r > 0.0) || !(R > 0.0) || !(d >= 0.0)) throw DomainError("circle radii must be positive and distance >= 0");
  if (d >= r + R) return 0.0;
  if (d <= std::abs(R - r)) {
    const double small = std::min(r, R);
    return kPi * small * small;
  }
  // Sum of the two circular segments cut off by the common chord. Each segment is
  // rho^2 (x - sin x) / 2 for the central angle x, which the series keeps accurate
  // when x is tiny (one radius much larger than the other).
  const double k = (-d + r + R) * (d + r - R) * (d - r + R) * (d + r + R);
  const double h = 0.5 * std::sqrt(std::max(k, 0.0)) / d;  // half chord
  const double a1 = std::atan2(h, ((d - R) * (d + R) + r * r) / (2.0 * d));
  const double a2 = std::atan2(h, ((d - r) * (d + r) + R * R) / (2.0 * d));
  auto segment = [](double rho, double half_angle) {
    const double x = 2.0 * half_angle;
    double xs;
    if (x < 0.1) {
      const double x2 = x * x;
      xs = x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    } else {
      xs = x - std::sin(x);
    }
    return 0.5 * rho * rho * xs;
  };
  return segment(r, a1) + segment(R, a2);
}

}  // namespace gmt
