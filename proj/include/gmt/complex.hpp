#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "gmt/geometry.hpp"

namespace gmt {

using Coefficient = std::int64_t;

// Checked integer arithmetic; throws OverflowError.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Sparse integer chain: a formal sum of simplices of a single dimension.
///
/// Only nonzero coefficients are stored, keyed by simplex index, so two chains with
/// the same value compare equal.
class Chain {
 public:
  explicit Chain(int dimension = 1);
  Chain(int dimension, std::map<std::size_t, Coefficient> terms);

  int dimension() const { return dimension_; }
  const std::map<std::size_t, Coefficient>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(std::size_t index) const;

  // Adds `value` to the coefficient of `index`, dropping the entry when it cancels.
  void add(std::size_t index, Coefficient value);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Coefficient k, const Chain& c);
  friend bool operator==(const Chain& a, const Chain& b) = default;

 private:
  int dimension_;
  std::map<std::size_t, Coefficient> terms_;
};

struct Edge {
  std::size_t tail;
  std::size_t head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// An edge of a triangle together with the sign it carries in the triangle's
// counterclockwise boundary loop.
struct SignedEdge {
  std::size_t edge;
  int sign;
};

/// Oriented simplicial 2-complex embedded in the plane.
///
/// Triangles are stored counterclockwise. Each triangle (a, b, c) has boundary
/// [a,b] + [b,c] + [c,a]; an edge stored as (tail, head) enters with sign +1 when it
/// runs along that loop and -1 otherwise. Triangle sides missing from the edge list
/// are appended (tail = smaller vertex index) so that edge indices given by the caller
/// stay stable.
class OrientedComplex2 {
 public:
  OrientedComplex2() = default;
  OrientedComplex2(std::vector<Point2> vertices, std::vector<Edge> edges,
                   std::vector<std::array<std::size_t, 3>> triangles);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::array<std::size_t, 3>>& triangles() const { return triangles_; }
  const std::vector<std::array<SignedEdge, 3>>& triangle_edges() const { return triangle_edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

  // Number of simplices of the given dimension (0, 1 or 2).
  std::size_t simplex_count(int dimension) const;

  // Index of the edge joining u and v in either direction, or -1.
  std::ptrdiff_t find_edge(std::size_t u, std::size_t v) const;

  // Signed 1-chain along the path through the given vertices; every consecutive pair
  // must be joined by an edge.
  Chain path_chain(std::span<const std::size_t> path) const;

  // Throws StructuralError if the chain does not fit this complex.
  void validate(const Chain& chain) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<std::array<SignedEdge, 3>> triangle_edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
};

struct SimplexMeasures {
  std::vector<double> edge_lengths;
  std::vector<double> triangle_areas;
  std::vector<double> triangle_diameters;
  std::vector<double> triangle_perimeters;
  std::vector<double> triangle_inradii;

  // Volume of a simplex; points have unit 0-volume.
  double volume(int dimension, std::size_t index) const;
};

// Applies the signed incidence: triangles to edge loops, edges to head - tail.
// A 0-chain has the zero 0-chain as boundary.
Chain boundary(const Chain& chain, const OrientedComplex2& complex);

double mass(const Chain& chain, const SimplexMeasures& measures);

SimplexMeasures measure_complex(const OrientedComplex2& complex);

struct StripComplex {
  OrientedComplex2 complex;
  Chain top_chain;     // A to B along the upper vertices
  Chain bottom_chain;  // A to B along the lower vertices, an equal-mass witness
  Point2 a;
  Point2 b;
};

// Row of 2n equilateral triangles of side `side` arranged as n diamonds joined at
// their tips, from A = (0, 0) to B = (n * side * sqrt(3), 0).
StripComplex strip_complex(int n, double side = 2.0);

// Vertex-level helpers shared by the measure and quality code.
struct TriangleShape {
  double area;
  double perimeter;
  double diameter;
  double inradius;
  std::array<double, 3> angles;  // interior angles, radians
};

// Throws DegeneracyError when area <= 1e-14 * diameter^2.
TriangleShape triangle_shape(Point2 a, Point2 b, Point2 c);

}  // namespace gmt
