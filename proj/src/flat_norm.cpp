#include "gmt/flat_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gmt/errors.hpp"

namespace gmt {
namespace {

constexpr double kIntegralTolerance = 1e-7;

void check_problem(const FlatNormProblem& problem) {
  if (!problem.complex) throw DomainError("flat norm problem has no complex");
  const int d = problem.input.dimension();
  if (d != 0 && d != 1) throw DomainError("flat norm input must be a 0- or 1-chain on a 2-complex");
  if (!(problem.lambda >= 0.0) || !std::isfinite(problem.lambda)) throw DomainError("lambda must be finite and >= 0");
  problem.complex->validate(problem.input);
  if (problem.weights.edge_lengths.size() != problem.complex->edge_count() ||
      problem.weights.triangle_areas.size() != problem.complex->triangle_count())
    throw DomainError("weights do not match the complex");
}

// Boundary of a single (d+1)-simplex as (d-simplex, sign) pairs.
std::vector<std::pair<std::size_t, int>> facets(const OrientedComplex2& complex, int dim, std::size_t index) {
  if (dim == 2) {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& se : complex.triangle_edges()[index]) out.emplace_back(se.edge, se.sign);
    return out;
  }
  const auto& e = complex.edges()[index];
  return {{e.head, 1}, {e.tail, -1}};
}

}  // namespace

FlatNormProblem FlatNormProblem::make(std::shared_ptr<const OrientedComplex2> complex, Chain input, double lambda) {
  FlatNormProblem p;
  p.weights = measure_complex(*complex);
  p.complex = std::move(complex);
  p.input = std::move(input);
  p.lambda = lambda;
  return p;
}

FlatNormLp build_lp(const FlatNormProblem& problem) {
  check_problem(problem);
  const auto& complex = *problem.complex;
  const int d = problem.input.dimension();
  FlatNormLp out;
  out.x_count = complex.simplex_count(d);
  out.s_count = complex.simplex_count(d + 1);

  auto& lp = out.program;
  lp.rows = out.x_count;
  lp.rhs.assign(out.x_count, 0.0);
  for (const auto& [i, c] : problem.input.terms()) lp.rhs[i] = static_cast<double>(c);

  const std::size_t total = 2 * out.x_count + 2 * out.s_count;
  lp.columns.resize(total);
  lp.cost.resize(total);
  for (std::size_t i = 0; i < out.x_count; ++i) {
    const double w = problem.weights.volume(d, i);
    lp.columns[out.x_plus(i)] = {{i, 1.0}};
    lp.columns[out.x_minus(i)] = {{i, -1.0}};
    lp.cost[out.x_plus(i)] = w;
    lp.cost[out.x_minus(i)] = w;
  }
  for (std::size_t k = 0; k < out.s_count; ++k) {
    const double w = problem.lambda * problem.weights.volume(d + 1, k);
    auto& plus = lp.columns[out.s_plus(k)];
    auto& minus = lp.columns[out.s_minus(k)];
    for (const auto& [row, sign] : facets(complex, d + 1, k)) {
      plus.emplace_back(row, static_cast<double>(sign));
      minus.emplace_back(row, -static_cast<double>(sign));
    }
    lp.cost[out.s_plus(k)] = w;
    lp.cost[out.s_minus(k)] = w;
  }

  out.initial_basis.resize(out.x_count);
  for (std::size_t i = 0; i < out.x_count; ++i)
    out.initial_basis[i] = lp.rhs[i] < 0.0 ? out.x_minus(i) : out.x_plus(i);
  return out;
}

FlatNormDecomposition solve_flat_norm(const FlatNormProblem& problem, const lp::Options& options) {
  const FlatNormLp model = build_lp(problem);
  const lp::Solution sol = lp::solve(model.program, model.initial_basis, options);
  if (sol.status != lp::Status::optimal)
    throw SolverIntegrityError(std::string("flat norm LP ended with status ") + lp::to_string(sol.status));

  const int d = problem.input.dimension();
  FlatNormDecomposition out;
  out.x_chain = Chain(d);
  out.s_chain = Chain(d + 1);
  out.lp_objective = sol.objective;
  out.lp_iterations = sol.iterations;

  bool integral = true;
  auto rounded = [&](double v) {
    const double r = std::round(v);
    if (std::abs(v - r) > kIntegralTolerance) integral = false;
    return static_cast<Coefficient>(r);
  };
  for (std::size_t i = 0; i < model.x_count; ++i)
    out.x_chain.add(i, rounded(sol.x[model.x_plus(i)]) - rounded(sol.x[model.x_minus(i)]));
  for (std::size_t k = 0; k < model.s_count; ++k)
    out.s_chain.add(k, rounded(sol.x[model.s_plus(k)]) - rounded(sol.x[model.s_minus(k)]));

  if (integral) integral = (out.x_chain + boundary(out.s_chain, *problem.complex)) == problem.input;
  out.is_integral = integral;

  if (integral) {
    out.value = mass(out.x_chain, problem.weights) + problem.lambda * mass(out.s_chain, problem.weights);
    if (std::abs(out.value - sol.objective) > 1e-9 * std::max(1.0, std::abs(sol.objective)))
      throw SolverIntegrityError("rounded decomposition disagrees with the LP objective");
  } else {
    out.value = sol.objective;
  }
  return out;
}

std::vector<SweepEntry> lambda_sweep(const FlatNormProblem& problem, std::span<const double> lambdas,
                                     const lp::Options& options) {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] >= 0.0) || !std::isfinite(lambdas[i])) throw DomainError("sweep scales must be finite and >= 0");
    if (i > 0 && lambdas[i] < lambdas[i - 1]) throw DomainError("sweep scales must be ascending");
  }
  std::vector<SweepEntry> out;
  out.reserve(lambdas.size());
  FlatNormProblem p = problem;
  for (double l : lambdas) {
    p.lambda = l;
    out.push_back({l, solve_flat_norm(p, options)});
  }
  return out;
}

std::vector<double> lambda_breakpoints(const FlatNormProblem& problem, double lo, double hi,
                                       const lp::Options& options) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) throw DomainError("breakpoint search needs 0 <= lo < hi");
  FlatNormProblem p = problem;
  struct Line {
    double intercept;  // mass(X)
    double slope;      // mass(S)
  };
  auto solve_at = [&](double l) {
    p.lambda = l;
    const auto dec = solve_flat_norm(p, options);
    return Line{mass(dec.x_chain, p.weights), mass(dec.s_chain, p.weights)};
  };

  std::vector<double> out;
  const double tol = 1e-9;
  std::function<void(double, Line, double, Line, int)> recurse = [&](double a, Line la, double b, Line lb, int depth) {
    if (std::abs(la.slope - lb.slope) <= tol * std::max(1.0, la.slope) || depth > 64) return;
    const double x = (lb.intercept - la.intercept) / (la.slope - lb.slope);
    if (!(x > a) || !(x < b)) return;
    const Line lx = solve_at(x);
    const double on_line = la.intercept + x * la.slope;
    const double at_x = lx.intercept + x * lx.slope;
    if (at_x >= on_line - tol * std::max(1.0, on_line)) {
      out.push_back(x);
      return;
    }
    recurse(a, la, x, lx, depth + 1);
    recurse(x, lx, b, lb, depth + 1);
  };
  recurse(lo, solve_at(lo), hi, solve_at(hi), 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gmt
