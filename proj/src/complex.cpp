#include "gmt/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "gmt/errors.hpp"

namespace gmt {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("chain coefficient overflow in addition");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("chain coefficient overflow in multiplication");
  return out;
}

Chain::Chain(int dimension) : dimension_(dimension) {
  if (dimension < 0 || dimension > 2) throw DomainError("chain dimension must be 0, 1 or 2");
}

Chain::Chain(int dimension, std::map<std::size_t, Coefficient> terms) : Chain(dimension) {
  for (const auto& [index, value] : terms) add(index, value);
}

Coefficient Chain::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void Chain::add(std::size_t index, Coefficient value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, value);
  if (inserted) return;
  it->second = checked_add(it->second, value);
  if (it->second == 0) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.dimension_ != dimension_) throw DomainError("adding chains of different dimension");
  for (const auto& [index, value] : other.terms_) add(index, value);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.dimension_ != dimension_) throw DomainError("subtracting chains of different dimension");
  for (const auto& [index, value] : other.terms_) add(index, checked_mul(value, -1));
  return *this;
}

Chain operator*(Coefficient k, const Chain& c) {
  Chain out(c.dimension_);
  if (k == 0) return out;
  for (const auto& [index, value] : c.terms_) out.terms_.emplace(index, checked_mul(k, value));
  return out;
}

TriangleShape triangle_shape(Point2 a, Point2 b, Point2 c) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) throw DomainError("non-finite vertex coordinate");
  const double la = distance(b, c);
  const double lb = distance(c, a);
  const double lc = distance(a, b);
  TriangleShape s{};
  s.area = 0.5 * std::abs(signed_area2(a, b, c));
  s.perimeter = la + lb + lc;
  s.diameter = std::max({la, lb, lc});
  if (!(s.area > 1e-14 * s.diameter * s.diameter)) throw DegeneracyError("degenerate triangle");
  s.inradius = 2.0 * s.area / s.perimeter;
  auto angle_at = [](Point2 p, Point2 q, Point2 r) {
    const Point2 u = q - p;
    const Point2 v = r - p;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
  };
  s.angles = {angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)};
  return s;
}

OrientedComplex2::OrientedComplex2(std::vector<Point2> vertices, std::vector<Edge> edges,
                                   std::vector<std::array<std::size_t, 3>> triangles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), triangles_(std::move(triangles)) {
  const std::size_t nv = vertices_.size();
  for (std::size_t i = 0; i < nv; ++i) {
    if (!is_finite(vertices_[i])) throw StructuralError("vertex " + std::to_string(i) + " has a non-finite coordinate");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [t, h] = edges_[e];
    if (t >= nv || h >= nv) throw StructuralError("edge " + std::to_string(e) + " references a missing vertex");
    if (t == h) throw StructuralError("edge " + std::to_string(e) + " is a loop");
    auto key = std::minmax(t, h);
    if (!edge_lookup_.emplace(std::pair{key.first, key.second}, e).second)
      throw StructuralError("edge " + std::to_string(e) + " duplicates an earlier edge");
  }

  std::set<std::array<std::size_t, 3>> seen;
  triangle_edges_.reserve(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    auto& tri = triangles_[t];
    for (std::size_t v : tri) {
      if (v >= nv) throw StructuralError("triangle " + std::to_string(t) + " references a missing vertex");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw StructuralError("triangle " + std::to_string(t) + " repeats a vertex");
    auto sorted = tri;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) throw StructuralError("triangle " + std::to_string(t) + " duplicates an earlier triangle");

    const Point2 p0 = vertices_[tri[0]], p1 = vertices_[tri[1]], p2 = vertices_[tri[2]];
    try {
      triangle_shape(p0, p1, p2);
    } catch (const DegeneracyError&) {
      throw DegeneracyError("triangle " + std::to_string(t) + " is degenerate");
    }
    if (orient2d(p0, p1, p2) < 0) std::swap(tri[1], tri[2]);

    std::array<SignedEdge, 3> incidence{};
    for (int k = 0; k < 3; ++k) {
      const std::size_t u = tri[k];
      const std::size_t v = tri[(k + 1) % 3];
      auto key = std::minmax(u, v);
      auto it = edge_lookup_.find({key.first, key.second});
      std::size_t e;
      if (it == edge_lookup_.end()) {
        e = edges_.size();
        edges_.push_back({key.first, key.second});
        edge_lookup_.emplace(std::pair{key.first, key.second}, e);
      } else {
        e = it->second;
      }
      incidence[k] = {e, edges_[e].tail == u ? 1 : -1};
    }
    triangle_edges_.push_back(incidence);
  }
}

std::size_t OrientedComplex2::simplex_count(int dimension) const {
  switch (dimension) {
    case 0: return vertices_.size();
    case 1: return edges_.size();
    case 2: return triangles_.size();
    default: throw DomainError("simplex dimension must be 0, 1 or 2");
  }
}

std::ptrdiff_t OrientedComplex2::find_edge(std::size_t u, std::size_t v) const {
  auto key = std::minmax(u, v);
  auto it = edge_lookup_.find({key.first, key.second});
  return it == edge_lookup_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

Chain OrientedComplex2::path_chain(std::span<const std::size_t> path) const {
  Chain out(1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto e = find_edge(path[i], path[i + 1]);
    if (e < 0) throw StructuralError("path uses a missing edge");
    out.add(static_cast<std::size_t>(e), edges_[e].tail == path[i] ? 1 : -1);
  }
  return out;
}

void OrientedComplex2::validate(const Chain& chain) const {
  const std::size_t n = simplex_count(chain.dimension());
  if (!chain.empty() && chain.terms().rbegin()->first >= n)
    throw StructuralError("chain references simplex " + std::to_string(chain.terms().rbegin()->first) +
                          " but the complex has " + std::to_string(n) + " of dimension " +
                          std::to_string(chain.dimension()));
}

double SimplexMeasures::volume(int dimension, std::size_t index) const {
  switch (dimension) {
    case 0: return 1.0;
    case 1: return edge_lengths.at(index);
    case 2: return triangle_areas.at(index);
    default: throw DomainError("simplex dimension must be 0, 1 or 2");
  }
}

Chain boundary(const Chain& chain, const OrientedComplex2& complex) {
  complex.validate(chain);
  switch (chain.dimension()) {
    case 0: return Chain(0);
    case 1: {
      Chain out(0);
      for (const auto& [e, c] : chain.terms()) {
        out.add(complex.edges()[e].head, c);
        out.add(complex.edges()[e].tail, checked_mul(c, -1));
      }
      return out;
    }
    default: {
      Chain out(1);
      for (const auto& [t, c] : chain.terms()) {
        for (const auto& se : complex.triangle_edges()[t]) out.add(se.edge, checked_mul(c, se.sign));
      }
      return out;
    }
  }
}

double mass(const Chain& chain, const SimplexMeasures& measures) {
  double total = 0.0;
  for (const auto& [index, c] : chain.terms())
    total += std::abs(static_cast<double>(c)) * measures.volume(chain.dimension(), index);
  return total;
}

SimplexMeasures measure_complex(const OrientedComplex2& complex) {
  SimplexMeasures m;
  const auto& v = complex.vertices();
  m.edge_lengths.reserve(complex.edge_count());
  for (const auto& e : complex.edges()) m.edge_lengths.push_back(distance(v[e.tail], v[e.head]));
  for (const auto& t : complex.triangles()) {
    const auto s = triangle_shape(v[t[0]], v[t[1]], v[t[2]]);
    m.triangle_areas.push_back(s.area);
    m.triangle_diameters.push_back(s.diameter);
    m.triangle_perimeters.push_back(s.perimeter);
    m.triangle_inradii.push_back(s.inradius);
  }
  return m;
}

StripComplex strip_complex(int n, double side) {
  if (n < 1) throw DomainError("strip_complex needs n >= 1");
  if (!(side > 0.0) || !std::isfinite(side)) throw DomainError("strip_complex needs a positive side");
  const double h = side * std::numbers::sqrt3 / 2.0;  // diamond half-width
  const double half = side / 2.0;

  // Vertex layout per diamond i: left tip, upper, lower; the right tip is the next
  // diamond's left tip. The final tip is B.
  std::vector<Point2> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::size_t> upper_path{0}, lower_path{0};
  vertices.push_back({0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    const double x0 = 2.0 * h * i;
    const std::size_t left = vertices.size() - 1;
    const std::size_t up = vertices.size();
    vertices.push_back({x0 + h, half});
    const std::size_t down = vertices.size();
    vertices.push_back({x0 + h, -half});
    const std::size_t right = vertices.size();
    vertices.push_back({x0 + 2.0 * h, 0.0});
    triangles.push_back({left, down, up});
    triangles.push_back({up, down, right});
    upper_path.insert(upper_path.end(), {up, right});
    lower_path.insert(lower_path.end(), {down, right});
  }

  std::vector<Edge> edges;
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      auto key = std::minmax(t[k], t[(k + 1) % 3]);
      Edge e{key.first, key.second};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
  }

  StripComplex out{OrientedComplex2(std::move(vertices), std::move(edges), std::move(triangles)), Chain(1), Chain(1),
                   {0.0, 0.0}, {2.0 * h * n, 0.0}};
  out.top_chain = out.complex.path_chain(upper_path);
  out.bottom_chain = out.complex.path_chain(lower_path);
  return out;
}

}  // namespace gmt
