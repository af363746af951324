#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "gmt/simplex.hpp"

using namespace gmt::lp;

namespace {

std::vector<std::vector<double>> dense(const LinearProgram& lp) {
  std::vector<std::vector<double>> a(lp.rows, std::vector<double>(lp.cols(), 0.0));
  for (std::size_t j = 0; j < lp.cols(); ++j)
    for (const auto& [r, v] : lp.columns[j]) a[r][j] += v;
  return a;
}

// Solves the square system by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (std::abs(m[p][c]) < 1e-12) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

// Minimum over every basic feasible solution.
double vertex_enumeration(const LinearProgram& lp) {
  const auto a = dense(lp);
  const std::size_t m = lp.rows, n = lp.cols();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<double>> b(m, std::vector<double>(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) b[r][c] = a[r][pick[c]];
    if (auto x = solve_square(b, lp.rhs)) {
      bool feasible = true;
      double obj = 0.0;
      for (std::size_t c = 0; c < m; ++c) {
        if ((*x)[c] < -1e-9) feasible = false;
        obj += lp.cost[pick[c]] * (*x)[c];
      }
      if (feasible) best = std::min(best, obj);
    }
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < m; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

LinearProgram random_lp(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_real_distribution<double> cost(0.1, 2.0), x0(0.0, 2.0);
  LinearProgram lp;
  lp.rows = m;
  lp.columns.resize(n);
  lp.cost.resize(n);
  lp.rhs.assign(m, 0.0);
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    lp.cost[j] = cost(rng);
    x[j] = x0(rng);
    for (std::size_t r = 0; r < m; ++r) {
      const int v = coef(rng);
      if (v != 0) lp.columns[j].emplace_back(r, v);
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, v] : lp.columns[j]) lp.rhs[r] += v * x[j];
  // Costly surplus columns keep A at full row rank without changing feasibility.
  for (std::size_t r = 0; r < m; ++r) {
    lp.columns.push_back({{r, -1.0}});
    lp.cost.push_back(5.0);
  }
  return lp;
}

}  // namespace

TEST_CASE("two-phase solve matches vertex enumeration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const std::size_t n = m + 1 + trial % 5;
    const auto lp = random_lp(rng, m, n);
    const auto sol = solve(lp);
    REQUIRE(sol.status == Status::optimal);
    CHECK(sol.objective == doctest::Approx(vertex_enumeration(lp)).epsilon(1e-9));
    // primal feasibility
    std::vector<double> ax(m, 0.0);
    for (std::size_t j = 0; j < lp.cols(); ++j) {
      CHECK(sol.x[j] >= -1e-9);
      for (const auto& [r, v] : lp.columns[j]) ax[r] += v * sol.x[j];
    }
    for (std::size_t r = 0; r < m; ++r) CHECK(ax[r] == doctest::Approx(lp.rhs[r]).epsilon(1e-9));
  }
}

TEST_CASE("warm start from a feasible basis") {
  // min x1 + 2 x2 + 0 s  s.t. x1 + x2 - s = 1: basis {x2}: x2 = 1, improve to x1 = 1.
  LinearProgram lp;
  lp.rows = 1;
  lp.columns = {{{0, 1.0}}, {{0, 1.0}}, {{0, -1.0}}};
  lp.cost = {1.0, 2.0, 0.0};
  lp.rhs = {1.0};
  const std::vector<std::size_t> basis{1};
  const auto sol = solve(lp, basis);
  REQUIRE(sol.status == Status::optimal);
  CHECK(sol.objective == doctest::Approx(1.0));
  CHECK(sol.x[0] == doctest::Approx(1.0));
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram infeasible;
  infeasible.rows = 1;
  infeasible.columns = {{{0, 1.0}}, {{0, 1.0}}};
  infeasible.cost = {1.0, 1.0};
  infeasible.rhs = {-1.0};
  CHECK(solve(infeasible).status == Status::infeasible);

  LinearProgram unbounded;
  unbounded.rows = 1;
  unbounded.columns = {{{0, 1.0}}, {{0, -1.0}}};
  unbounded.cost = {0.0, -1.0};
  unbounded.rhs = {1.0};
  CHECK(solve(unbounded).status == Status::unbounded);
}

TEST_CASE("Beale's cycling example terminates under Bland's rule") {
  // Standard form of Beale's LP; Dantzig's rule with naive ties cycles here.
  LinearProgram lp;
  lp.rows = 3;
  lp.columns = {
      {{0, 0.25}, {1, 0.5}},   {{0, -60.0}, {1, -90.0}}, {{0, -0.04}, {1, -0.02}, {2, 1.0}},
      {{0, 9.0}, {1, 3.0}},    {{0, 1.0}},              {{1, 1.0}},
      {{2, 1.0}},
  };
  lp.cost = {-0.75, 150.0, -0.02, 6.0, 0.0, 0.0, 0.0};
  lp.rhs = {0.0, 0.0, 1.0};
  const std::vector<std::size_t> basis{4, 5, 6};
  const auto sol = solve(lp, basis);
  REQUIRE(sol.status == Status::optimal);
  CHECK(sol.objective == doctest::Approx(-0.05));
}

TEST_CASE("iteration limit is reported") {
  std::mt19937_64 rng(22);
  const auto lp = random_lp(rng, 4, 9);
  Options opts;
  opts.max_iterations = 0;
  CHECK(solve(lp, opts).status == Status::iteration_limit);
}
