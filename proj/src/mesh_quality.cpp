#include "gmt/mesh_quality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gmt/errors.hpp"

namespace gmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaSlack = 1e-12;  // equilateral angles land a few ulps off pi/3

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

double c_theta(double theta) {
  if (!(theta > 0.0) || theta > kPi / 3.0 + kThetaSlack) throw DomainError("c_theta needs 0 < theta <= pi/3");
  const double c = cot(std::min(theta, kPi / 3.0) / 2.0);
  return 48.0 / kPi * c * c + 4.0 * c;
}

double beta_constant() {
  const double s3 = std::numbers::sqrt3;
  return 4.0 * (2.0 + s3) * (24.0 + 12.0 * s3 + kPi) / kPi;
}

RegularityReport regularity_constant(const OrientedComplex2& complex) {
  if (complex.triangle_count() == 0) throw DomainError("regularity constant needs at least one triangle");
  RegularityReport report;
  report.theta_min = kPi;
  double sup_shape = 0.0;
  double sup_ratio = 0.0;
  const auto& v = complex.vertices();
  for (const auto& t : complex.triangles()) {
    const auto s = triangle_shape(v[t[0]], v[t[1]], v[t[2]]);
    const double shape = s.diameter * s.perimeter / (s.inradius * s.inradius);
    const double ratio = s.diameter / s.inradius;
    report.per_triangle_vartheta.push_back(4.0 / kPi * shape + 2.0 * ratio);
    sup_shape = std::max(sup_shape, shape);
    sup_ratio = std::max(sup_ratio, ratio);
    report.max_diameter = std::max(report.max_diameter, s.diameter);
    for (double a : s.angles) report.theta_min = std::min(report.theta_min, a);
  }
  report.vartheta = 4.0 / kPi * sup_shape + 2.0 * sup_ratio;
  report.c_theta_bound = c_theta(std::min(report.theta_min, kPi / 3.0));
  return report;
}

RatioCheck diameter_inradius_ratio_bound_check(Point2 a, Point2 b, Point2 c) {
  const auto s = triangle_shape(a, b, c);
  const double theta = std::min({s.angles[0], s.angles[1], s.angles[2]});
  RatioCheck out{};
  out.ratio = s.diameter / s.inradius;
  out.bound = 2.0 * cot(theta / 2.0);
  out.ok = out.ratio <= out.bound + 1e-9;
  return out;
}

DeformationBounds sdt_bounds(const BoundParameters& q) {
  if (q.d < 0) throw DomainError("current dimension d must be >= 0");
  if (q.p < q.d) throw DomainError("complex dimension p must be >= d");
  for (double x : {q.vartheta, q.delta_diam, q.mass_t, q.mass_bt}) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bound inputs must be finite and >= 0");
  }
  double base = 4.0;
  switch (q.variant) {
    case BoundVariant::classic: break;
    case BoundVariant::single_tight:
      if (!(q.eps > 0.0) || !std::isfinite(q.eps)) throw DomainError("eps must be > 0");
      base = 2.0 + q.eps;
      break;
    case BoundVariant::multi:
      if (q.m < 0 || q.n < 0 || q.m + q.n < 1) throw DomainError("multi variant needs m, n >= 0 and m + n >= 1");
      if (!(q.eps > 0.0) || !std::isfinite(q.eps)) throw DomainError("eps must be > 0");
      base = 2.0 * q.m + 2.0 * q.n + q.eps;
      break;
  }
  const double f = base * q.vartheta;
  const double fk = std::pow(f, q.p - q.d);
  const double delta = q.delta_diam;
  DeformationBounds b{};
  b.factor = f;
  b.mass_p = fk * q.mass_t + delta * fk * f * q.mass_bt;
  b.mass_boundary_p = fk * f * q.mass_bt;
  b.mass_q = delta * fk * (1.0 + f) * q.mass_bt;
  b.mass_r = delta * fk * q.mass_t;
  b.flat_distance = delta * fk * (q.mass_t + (1.0 + f) * q.mass_bt);
  return b;
}

double line_angle(Point2 u, Point2 v) { return std::atan2(std::abs(cross(u, v)), std::abs(dot(u, v))); }

GridRotation grid_rotation(std::span<const Point2> edge_directions) {
  if (edge_directions.empty()) throw DomainError("grid_rotation needs at least one edge direction");
  constexpr double quarter = kPi / 2.0;
  std::vector<double> folded;
  folded.reserve(edge_directions.size());
  for (const Point2& d : edge_directions) {
    if (!is_finite(d) || (d.x == 0.0 && d.y == 0.0)) throw DomainError("edge direction must be finite and nonzero");
    double a = std::fmod(std::atan2(d.y, d.x), quarter);
    if (a < 0.0) a += quarter;
    if (a >= quarter) a -= quarter;
    folded.push_back(a);
  }
  std::sort(folded.begin(), folded.end());
  std::vector<double> unique;
  for (double a : folded) {
    if (unique.empty() || a - unique.back() > 1e-12) unique.push_back(a);
  }
  if (unique.size() > 1 && unique.front() + quarter - unique.back() <= 1e-12) unique.pop_back();

  // Each folded value stands for two members of E (a direction and its perpendicular).
  const std::size_t k = unique.size();
  double best_gap = -1.0;
  double best_start = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double next = i + 1 < k ? unique[i + 1] : unique.front() + quarter;
    const double gap = next - unique[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_start = unique[i];
    }
  }
  GridRotation out{};
  out.phi = std::fmod(best_start + best_gap / 2.0, quarter);
  out.direction_count = 2 * k;
  out.guaranteed_min_angle = kPi / (2.0 * static_cast<double>(out.direction_count));
  return out;
}

}  // namespace gmt
