#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "gmt/complex.hpp"
#include "gmt/simplex.hpp"

namespace gmt {

/// Multiscale simplicial flat norm input: minimize M(X) + lambda * M(S) over chains
/// on the complex with input = X + boundary(S).
///
/// The input chain has dimension d in {0, 1}; S lives on (d+1)-simplices. Masses use
/// Euclidean volumes from `weights` (points weigh 1).
struct FlatNormProblem {
  std::shared_ptr<const OrientedComplex2> complex;
  Chain input{1};
  double lambda = 1.0;
  SimplexMeasures weights;

  static FlatNormProblem make(std::shared_ptr<const OrientedComplex2> complex, Chain input, double lambda = 1.0);
};

struct FlatNormDecomposition {
  Chain x_chain{1};
  Chain s_chain{2};
  double value = 0.0;         // mass(X) + lambda * mass(S)
  double lp_objective = 0.0;  // objective reported by the simplex solver
  bool is_integral = false;
  std::size_t lp_iterations = 0;
};

/// LP in split-variable form. Column blocks, in order: x+ and x- per d-simplex, then
/// s+ and s- per (d+1)-simplex, giving the constraint matrix [I  -I  B  -B].
struct FlatNormLp {
  lp::LinearProgram program;
  std::vector<std::size_t> initial_basis;  // X = input, S = 0
  std::size_t x_count = 0;
  std::size_t s_count = 0;

  std::size_t x_plus(std::size_t i) const { return i; }
  std::size_t x_minus(std::size_t i) const { return x_count + i; }
  std::size_t s_plus(std::size_t i) const { return 2 * x_count + i; }
  std::size_t s_minus(std::size_t i) const { return 2 * x_count + s_count + i; }
};

FlatNormLp build_lp(const FlatNormProblem& problem);

FlatNormDecomposition solve_flat_norm(const FlatNormProblem& problem, const lp::Options& options = {});

struct SweepEntry {
  double lambda;
  FlatNormDecomposition decomposition;
};

// Solves at each lambda (ascending, nonnegative). problem.lambda is ignored.
std::vector<SweepEntry> lambda_sweep(const FlatNormProblem& problem, std::span<const double> lambdas,
                                     const lp::Options& options = {});

// Scales in [lo, hi] where the optimal decomposition changes. The value is concave and
// piecewise linear in lambda; breakpoints are found exactly by intersecting the lines
// of optimal decompositions and re-solving at the intersection.
std::vector<double> lambda_breakpoints(const FlatNormProblem& problem, double lo, double hi,
                                       const lp::Options& options = {});

}  // namespace gmt
