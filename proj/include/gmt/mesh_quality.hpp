#pragma once

#include <span>
#include <vector>

#include "gmt/complex.hpp"

namespace gmt {

/// Shape-regularity summary of a planar 2-complex.
///
/// For triangles the regularity constant is
///   vartheta = (4/pi) sup diam*perim/inradius^2 + 2 sup diam/inradius,
/// the two suprema taken separately over all triangles. `per_triangle_vartheta` holds
/// each triangle's own value of the same expression, so `vartheta` is at least the
/// largest of them and equals it for a single triangle.
struct RegularityReport {
  double theta_min = 0.0;
  double vartheta = 0.0;
  std::vector<double> per_triangle_vartheta;
  double c_theta_bound = 0.0;
  double max_diameter = 0.0;
};

RegularityReport regularity_constant(const OrientedComplex2& complex);

// (48/pi) cot(theta/2)^2 + 4 cot(theta/2), the regularity bound for complexes whose
// minimum angle is at least theta. Requires 0 < theta <= pi/3.
double c_theta(double theta);

// 4(2+sqrt3)(24+12sqrt3+pi)/pi, the value of c_theta at 30 degrees.
double beta_constant();

struct RatioCheck {
  double ratio;  // diameter / inradius
  double bound;  // 2 cot(theta_min / 2)
  bool ok;
};

RatioCheck diameter_inradius_ratio_bound_check(Point2 a, Point2 b, Point2 c);

enum class BoundVariant { classic, single_tight, multi };

struct BoundParameters {
  int p = 2;
  int d = 1;
  double vartheta = 0.0;
  double delta_diam = 0.0;
  double mass_t = 0.0;
  double mass_bt = 0.0;
  BoundVariant variant = BoundVariant::classic;
  int m = 1;          // multi: number of d-currents
  int n = 0;          // multi: number of (d+1)-currents
  double eps = 0.0;   // single_tight and multi
};

struct DeformationBounds {
  double factor;  // 4 vartheta, (2+eps) vartheta or (2m+2n+eps) vartheta
  double mass_p;
  double mass_boundary_p;
  double mass_q;
  double mass_r;
  double flat_distance;
};

// Mass bounds for pushing a d-current onto a p-complex, given the regularity constant
// and the largest simplex diameter.
DeformationBounds sdt_bounds(const BoundParameters& params);

struct GridRotation {
  double phi;                     // rotation of the square grid, radians in [0, pi/2)
  double guaranteed_min_angle;    // pi / (2N)
  std::size_t direction_count;    // N = |E| after merging duplicates
};

// Chooses a square-grid rotation that keeps every angle between a grid line and an
// input edge at least pi/(2N). E holds each edge direction and its perpendicular
// (mod pi); the rotation is the midpoint of the largest gap between edge directions
// folded modulo pi/2.
GridRotation grid_rotation(std::span<const Point2> edge_directions);

// Smallest angle, in [0, pi/2], between the lines spanned by u and v.
double line_angle(Point2 u, Point2 v);

}  // namespace gmt
