#include "gmt/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "gmt/errors.hpp"
#include "gmt/halton.hpp"

namespace gmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

FourierPolygon::FourierPolygon(int m, int n_vertices) : FourierPolygon(m, n_vertices, std::vector<double>(4 * std::max(m, 0), 0.0)) {}

FourierPolygon::FourierPolygon(int m, int n_vertices, std::vector<double> coefficients)
    : m_(m), n_(n_vertices), coeffs_(std::move(coefficients)) {
  if (m_ < 1) throw DomainError("Fourier polygon needs m >= 1");
  if (n_ < 3) throw DomainError("Fourier polygon needs N >= 3");
  if (coeffs_.size() != static_cast<std::size_t>(4 * m_)) throw DomainError("Fourier polygon needs 4*m coefficients");
}

std::size_t FourierPolygon::index(int row, int j) const {
  if (row < 0 || row > 3 || j < 0 || j >= m_) throw DomainError("Fourier coefficient index out of range");
  return static_cast<std::size_t>(row * m_ + j);
}

FourierPolygon FourierPolygon::padded(int new_m) const {
  if (new_m < m_) throw DomainError("padding cannot drop harmonics");
  FourierPolygon out(new_m, n_);
  for (int row = 0; row < 4; ++row) {
    for (int j = 0; j < m_; ++j) out(row, j) = (*this)(row, j);
  }
  return out;
}

std::vector<Point2> synthesize(const FourierPolygon& fp) {
  const int m = fp.harmonics();
  const int n = fp.vertex_count();
  std::vector<Point2> out(n);
  for (int k = 1; k <= n; ++k) {
    double x = 0.0, y = 0.0;
    for (int j = 0; j < m; ++j) {
      // Reduce j*k mod N before scaling so large harmonics keep full precision.
      const double angle = 2.0 * kPi * static_cast<double>((static_cast<long long>(j) * k) % n) / n;
      const double c = std::cos(angle), s = std::sin(angle);
      x += fp(0, j) * c + fp(1, j) * s;
      y += fp(2, j) * c + fp(3, j) * s;
    }
    out[k - 1] = {x, y};
  }
  return out;
}

double objective(const FourierPolygon& fp, const Signature& target) {
  if (target.values.size() != static_cast<std::size_t>(fp.vertex_count()))
    throw DomainError("target signature length differs from the vertex count");
  const auto vertices = synthesize(fp);
  if (!is_simple(vertices)) return kInf;
  const auto values = detail::signature_values(vertices, target.radius);
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double diff = values[k] - target.values[k];
    total += diff * diff;
  }
  return total;
}

BestFitCircle best_fit_circle(const Signature& target, int n_vertices, double r_max) {
  if (target.values.empty()) throw DomainError("best-fit circle needs a nonempty signature");
  if (static_cast<std::size_t>(n_vertices) != target.values.size())
    throw DomainError("target signature length differs from the vertex count");
  const double r = target.radius;
  if (!(r > 0.0)) throw DomainError("signature radius must be positive");
  const double mean =
      std::accumulate(target.values.begin(), target.values.end(), 0.0) / static_cast<double>(target.values.size());
  if (!(mean > 0.0)) throw NoSolutionError("mean signature value must be positive");
  if (mean >= kPi * r * r) throw NoSolutionError("mean signature value reaches the full disk area");
  if (r_max <= 0.0) r_max = 1e6 * r;

  // Disk of radius r centred on a circle of radius R: lens area grows from pi r^2/4
  // at R = r/2 towards pi r^2/2 as R grows.
  auto lens = [r](double R) { return circle_intersection_area(R, r, R); };
  double lo = 0.5 * r, hi = r_max;
  BestFitCircle out{FourierPolygon(2, n_vertices), 0.0, 0.0, false};
  if (mean <= lens(lo)) {
    out.radius = lo;
    out.capped = true;
  } else if (mean >= lens(hi)) {
    out.radius = hi;
    out.capped = true;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f = lens(mid) - mean;
      if (std::abs(f) <= 1e-10 * r * r) {
        lo = hi = mid;
        break;
      }
      (f < 0.0 ? lo : hi) = mid;
    }
    out.radius = 0.5 * (lo + hi);
  }
  out.residual = lens(out.radius) - mean;
  out.polygon(0, 1) = out.radius;
  out.polygon(3, 1) = out.radius;
  return out;
}

std::vector<std::vector<double>> poll_directions(std::size_t n, std::uint64_t halton_index) {
  if (n == 0) throw DomainError("poll directions need n >= 1");
  const HaltonSequence halton(n);
  std::vector<double> q = halton.point(halton_index);
  double qq = 0.0;
  for (double& v : q) {
    v = 2.0 * v - 1.0;
    qq += v * v;
  }
  if (qq == 0.0) {
    q.assign(n, 0.0);
    q[0] = 1.0;
    qq = 1.0;
  }
  std::vector<std::vector<double>> dirs(n + 1, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) dirs[j][i] = (i == j ? 1.0 : 0.0) - 2.0 * q[i] * q[j] / qq;
  }
  double len = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s -= dirs[j][i];
    dirs[n][i] = s;
    len += s * s;
  }
  len = std::sqrt(len);
  for (double& v : dirs[n]) v /= len;
  return dirs;
}

SearchState mads_solve(const Signature& target, const FourierPolygon& initial, const MadsOptions& options) {
  const std::size_t n = initial.coefficients().size();
  if (options.budget < n + 1) throw DomainError("budget must allow at least one full poll (4m+1 evaluations)");
  if (!(options.mesh_ratio > 0.0) || options.mesh_ratio > 1.0) throw DomainError("mesh ratio must be in (0, 1]");

  SearchState state;
  state.incumbent = initial;
  state.objective = objective(initial, target);
  state.evaluations = 1;
  state.history.push_back(state.objective);

  double frame0 = options.initial_frame;
  if (frame0 <= 0.0) {
    double largest = 0.0;
    for (double v : initial.coefficients()) largest = std::max(largest, std::abs(v));
    frame0 = 0.1 * std::max(largest, 1e-3);
  }
  const double mesh0 = frame0 * options.mesh_ratio;
  state.frame_size = frame0;
  state.mesh_size = mesh0;
  if (state.objective == 0.0) return state;

  std::vector<double> trial(n);
  while (state.evaluations < options.budget && state.mesh_size >= options.min_mesh) {
    ++state.halton_index;
    const auto dirs = poll_directions(n, state.halton_index);
    bool improved = false;
    bool any_feasible = false;
    for (const auto& d : dirs) {
      if (state.evaluations >= options.budget) break;
      bool moved = false;
      const auto x = state.incumbent.coefficients();
      for (std::size_t i = 0; i < n; ++i) {
        const double step = state.mesh_size * std::round(state.frame_size * d[i] / state.mesh_size);
        moved = moved || step != 0.0;
        trial[i] = x[i] + step;
      }
      if (!moved) continue;
      FourierPolygon candidate(initial.harmonics(), initial.vertex_count(), trial);
      const double f = objective(candidate, target);
      ++state.evaluations;
      any_feasible = any_feasible || std::isfinite(f);
      if (f < state.objective) {
        state.incumbent = std::move(candidate);
        state.objective = f;
        improved = true;
        break;
      }
    }
    if (state.iterations == 0 && !std::isfinite(state.objective) && !any_feasible)
      throw InfeasibleStartError("initial point and its first poll are all infeasible");
    ++state.iterations;
    if (improved) {
      state.frame_size = std::min(2.0 * state.frame_size, frame0);
      state.mesh_size = std::min(2.0 * state.mesh_size, mesh0);
    } else {
      state.frame_size /= 4.0;
      state.mesh_size /= 4.0;
    }
    state.history.push_back(state.objective);
  }
  return state;
}

std::vector<SearchState> multiresolution_reconstruct(const Signature& target, int n_vertices,
                                                     std::span<const int> m_schedule, const MadsOptions& per_stage) {
  if (m_schedule.empty()) throw DomainError("harmonic schedule is empty");
  for (std::size_t i = 0; i < m_schedule.size(); ++i) {
    if (m_schedule[i] < 2) throw DomainError("harmonic counts must be >= 2 to hold the best-fit circle");
    if (i > 0 && m_schedule[i] < m_schedule[i - 1]) throw DomainError("harmonic schedule must be ascending");
  }
  std::vector<SearchState> stages;
  FourierPolygon start = best_fit_circle(target, n_vertices).polygon.padded(m_schedule.front());
  for (int m : m_schedule) {
    stages.push_back(mads_solve(target, start.padded(m), per_stage));
    start = stages.back().incumbent;
  }
  return stages;
}

}  // namespace gmt
