#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gmt::lp {

/// Equality-form LP: minimize cost . x subject to A x = rhs, x >= 0.
/// A is stored by columns as (row, value) pairs.
struct LinearProgram {
  std::size_t rows = 0;
  std::vector<double> cost;
  std::vector<std::vector<std::pair<std::size_t, double>>> columns;
  std::vector<double> rhs;

  std::size_t cols() const { return columns.size(); }
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(Status status);

struct Options {
  double tolerance = 1e-10;  // ratio test and reduced-cost threshold
  std::size_t max_iterations = 5'000'000;
  std::size_t refactor_interval = 200;
};

struct Solution {
  Status status = Status::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
  std::vector<std::size_t> basis;  // basic column per row at termination
};

// Revised simplex from a caller-supplied feasible basis (one column per row, with
// B^-1 rhs >= 0). Entering and leaving choices follow Bland's rule, so the method
// terminates on degenerate problems and stops at a basic (vertex) solution.
Solution solve(const LinearProgram& lp, std::span<const std::size_t> initial_basis, const Options& options = {});

// Two-phase variant: a phase with one artificial per row finds a feasible basis first.
Solution solve(const LinearProgram& lp, const Options& options = {});

}  // namespace gmt::lp
