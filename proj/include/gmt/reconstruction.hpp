#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gmt/area_invariant.hpp"

namespace gmt {

/// Closed polygon given by truncated Fourier series in each coordinate.
///
/// Rows of the 4 x m coefficient matrix are x-cosine, x-sine, y-cosine, y-sine;
/// column j multiplies the j-th harmonic. Vertex k = 1..N sits at s_k = k/N:
///   x_k = sum_j a(0,j) cos(2 pi j s_k) + a(1,j) sin(2 pi j s_k)
///   y_k = sum_j a(2,j) cos(2 pi j s_k) + a(3,j) sin(2 pi j s_k)
class FourierPolygon {
 public:
  FourierPolygon(int m, int n_vertices);
  FourierPolygon(int m, int n_vertices, std::vector<double> coefficients);

  int harmonics() const { return m_; }
  int vertex_count() const { return n_; }

  double& operator()(int row, int j) { return coeffs_[index(row, j)]; }
  double operator()(int row, int j) const { return coeffs_[index(row, j)]; }

  // Row-major 4 x m storage; this is the search vector of the optimizer.
  std::span<const double> coefficients() const { return coeffs_; }
  std::span<double> coefficients() { return coeffs_; }

  // Same curve with zero coefficients appended for the extra harmonics.
  FourierPolygon padded(int new_m) const;

  friend bool operator==(const FourierPolygon&, const FourierPolygon&) = default;

 private:
  std::size_t index(int row, int j) const;

  int m_;
  int n_;
  std::vector<double> coeffs_;
};

// Vertex list for k = 1..N. Not necessarily simple.
std::vector<Point2> synthesize(const FourierPolygon& fp);

// Squared signature mismatch; +infinity when the synthesized polygon is not simple.
double objective(const FourierPolygon& fp, const Signature& target);

struct BestFitCircle {
  FourierPolygon polygon;  // a(0,1) = a(3,1) = radius, everything else zero
  double radius;
  double residual;  // lens area at `radius` minus the mean signature value
  bool capped;      // radius clamped to the search interval
};

// Regular N-gon whose circumscribed circle has the mean signature value as its
// two-disk lens area (disk of radius r centred on the circle). Bisection on
// R in [r/2, r_max]; throws NoSolutionError for a mean outside (0, pi r^2).
BestFitCircle best_fit_circle(const Signature& target, int n_vertices, double r_max = 0.0);

struct MadsOptions {
  std::size_t budget = 5000;     // objective evaluations
  double initial_frame = 0.0;    // 0: a tenth of the largest |coefficient|
  double mesh_ratio = 1.0 / 32;  // initial mesh size / initial frame size
  double min_mesh = 1e-9;
};

struct SearchState {
  FourierPolygon incumbent{1, 3};
  double objective = 0.0;
  double mesh_size = 0.0;
  double frame_size = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  std::uint64_t halton_index = 0;
  std::vector<double> history;  // incumbent objective after each iteration
};

// Poll directions for one iteration: the n columns of the Householder matrix built
// from the Halton point with the given index, then their negated sum normalized to
// unit length. Together they positively span R^n.
std::vector<std::vector<double>> poll_directions(std::size_t n, std::uint64_t halton_index);

// Mesh adaptive direct search with an extreme barrier and opportunistic polling over
// the 4m coefficients. Poll steps are frame * direction rounded to the mesh; success
// doubles mesh and frame (capped at their initial values), failure quarters them.
SearchState mads_solve(const Signature& target, const FourierPolygon& initial, const MadsOptions& options = {});

// Coarse-to-fine search over ascending harmonic counts. The first stage starts from the
// best-fit circle, later stages from the zero-padded previous incumbent.
std::vector<SearchState> multiresolution_reconstruct(const Signature& target, int n_vertices,
                                                     std::span<const int> m_schedule,
                                                     const MadsOptions& per_stage = {});

}  // namespace gmt
