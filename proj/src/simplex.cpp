#include "gmt/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmt/errors.hpp"

namespace gmt::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

using Column = std::vector<std::pair<std::size_t, double>>;

// Dense revised simplex over an explicit column list. The basis inverse is kept in
// column-major order and updated by a product-form pivot; it is rebuilt from scratch
// every `refactor_interval` pivots.
class RevisedSimplex {
 public:
  RevisedSimplex(std::size_t rows, std::vector<Column> columns, std::vector<double> rhs, const Options& options)
      : m_(rows), columns_(std::move(columns)), rhs_(std::move(rhs)), options_(options),
        binv_(m_ * m_, 0.0), xb_(m_, 0.0), y_(m_, 0.0), position_(columns_.size(), -1) {}

  void set_basis(std::span<const std::size_t> basis) {
    if (basis.size() != m_) throw SolverIntegrityError("initial basis has the wrong size");
    basis_.assign(basis.begin(), basis.end());
    std::fill(position_.begin(), position_.end(), -1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= columns_.size() || position_[basis_[i]] >= 0)
        throw SolverIntegrityError("initial basis repeats or misses a column");
      position_[basis_[i]] = static_cast<std::ptrdiff_t>(i);
    }
  }

  // Minimizes cost over the current columns; columns with allowed[j] == false never enter.
  Status optimize(const std::vector<double>& cost, const std::vector<bool>& allowed) {
    cost_ = &cost;
    refactor();
    for (double v : xb_) {
      if (v < -1e-9) throw SolverIntegrityError("initial basis is not primal feasible");
    }
    std::size_t since_refactor = 0;
    std::vector<double> w(m_);
    std::vector<std::size_t> nz;
    while (true) {
      if (iterations_ >= options_.max_iterations) return Status::iteration_limit;
      if (since_refactor >= options_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }

      // Bland: lowest-index improving column enters.
      std::size_t entering = columns_.size();
      double reduced = 0.0;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (position_[j] >= 0 || !allowed[j]) continue;
        double d = cost[j];
        for (const auto& [row, a] : columns_[j]) d -= y_[row] * a;
        if (d < -options_.tolerance) {
          entering = j;
          reduced = d;
          break;
        }
      }
      if (entering == columns_.size()) return Status::optimal;

      std::fill(w.begin(), w.end(), 0.0);
      for (const auto& [row, a] : columns_[entering]) {
        const double* col = &binv_[row * m_];
        for (std::size_t i = 0; i < m_; ++i) w[i] += a * col[i];
      }

      // Bland: among minimal ratios the lowest-index basic column leaves.
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      nz.clear();
      for (std::size_t i = 0; i < m_; ++i) {
        if (std::abs(w[i]) <= 1e-14) {
          w[i] = 0.0;
          continue;
        }
        nz.push_back(i);
        if (w[i] <= options_.tolerance) continue;
        const double ratio = std::max(xb_[i], 0.0) / w[i];
        if (leave == m_ || ratio < best - options_.tolerance) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + options_.tolerance && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) return Status::unbounded;

      pivot(entering, leave, w, nz, reduced);
      ++iterations_;
      ++since_refactor;
    }
  }

  std::size_t iterations() const { return iterations_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<double>& basic_values() const { return xb_; }

  // Row r of B^-1 applied to column j.
  double tableau_entry(std::size_t r, std::size_t j) const {
    double v = 0.0;
    for (const auto& [row, a] : columns_[j]) v += a * binv_[row * m_ + r];
    return v;
  }

  void pivot_in(std::size_t entering, std::size_t leave) {
    std::vector<double> w(m_, 0.0);
    for (const auto& [row, a] : columns_[entering]) {
      const double* col = &binv_[row * m_];
      for (std::size_t i = 0; i < m_; ++i) w[i] += a * col[i];
    }
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < m_; ++i) {
      if (std::abs(w[i]) > 1e-14) nz.push_back(i);
      else w[i] = 0.0;
    }
    double d = (*cost_)[entering];
    for (const auto& [row, a] : columns_[entering]) d -= y_[row] * a;
    pivot(entering, leave, w, nz, d);
  }

 private:
  void pivot(std::size_t entering, std::size_t leave, const std::vector<double>& w,
             const std::vector<std::size_t>& nz, double reduced) {
    const double wr = w[leave];
    const double step = xb_[leave] / wr;
    for (std::size_t i : nz) xb_[i] -= step * w[i];
    xb_[leave] = step;
    for (double& v : xb_) {
      if (v < 0.0 && v > -1e-11) v = 0.0;
    }

    for (std::size_t k = 0; k < m_; ++k) {
      double* col = &binv_[k * m_];
      const double pivot_value = col[leave] / wr;
      col[leave] = pivot_value;
      if (pivot_value == 0.0) continue;
      for (std::size_t i : nz) {
        if (i != leave) col[i] -= w[i] * pivot_value;
      }
      y_[k] += reduced * pivot_value;
    }

    position_[basis_[leave]] = -1;
    basis_[leave] = entering;
    position_[entering] = static_cast<std::ptrdiff_t>(leave);
  }

  void refactor() {
    // Gauss-Jordan on [B | I] with partial pivoting; B is typically close to a
    // signed permutation, so most eliminations are skipped.
    std::vector<double> b(m_ * m_, 0.0);  // row-major B
    for (std::size_t i = 0; i < m_; ++i) {
      for (const auto& [row, a] : columns_[basis_[i]]) b[row * m_ + i] = a;
    }
    std::vector<double> inv(m_ * m_, 0.0);  // row-major
    for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < m_; ++r) {
        if (std::abs(b[r * m_ + c]) > std::abs(b[p * m_ + c])) p = r;
      }
      if (std::abs(b[p * m_ + c]) < 1e-12) throw SolverIntegrityError("basis matrix became singular");
      if (p != c) {
        std::swap_ranges(b.begin() + p * m_, b.begin() + (p + 1) * m_, b.begin() + c * m_);
        std::swap_ranges(inv.begin() + p * m_, inv.begin() + (p + 1) * m_, inv.begin() + c * m_);
      }
      const double d = b[c * m_ + c];
      for (std::size_t k = 0; k < m_; ++k) {
        b[c * m_ + k] /= d;
        inv[c * m_ + k] /= d;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = b[r * m_ + c];
        if (f == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          b[r * m_ + k] -= f * b[c * m_ + k];
          inv[r * m_ + k] -= f * inv[c * m_ + k];
        }
      }
    }
    // inv is B^-1 row-major; store column-major.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) binv_[k * m_ + i] = inv[i * m_ + k];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k < m_; ++k) v += binv_[k * m_ + i] * rhs_[k];
      xb_[i] = (v < 0.0 && v > -1e-11) ? 0.0 : v;
    }
    for (std::size_t k = 0; k < m_; ++k) {
      double v = 0.0;
      for (std::size_t i = 0; i < m_; ++i) v += (*cost_)[basis_[i]] * binv_[k * m_ + i];
      y_[k] = v;
    }
  }

  std::size_t m_;
  std::vector<Column> columns_;
  std::vector<double> rhs_;
  Options options_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::vector<double> y_;
  std::vector<std::size_t> basis_;
  std::vector<std::ptrdiff_t> position_;
  const std::vector<double>* cost_ = nullptr;
  std::size_t iterations_ = 0;
};

void check_shape(const LinearProgram& lp) {
  if (lp.cost.size() != lp.columns.size()) throw DomainError("LP cost and column counts differ");
  if (lp.rhs.size() != lp.rows) throw DomainError("LP right-hand side has the wrong length");
  for (const auto& col : lp.columns) {
    for (const auto& [row, a] : col) {
      if (row >= lp.rows) throw DomainError("LP column references a missing row");
      if (!std::isfinite(a)) throw DomainError("LP matrix entry is not finite");
    }
  }
}

Solution finish(const RevisedSimplex& solver, Status status, std::size_t structural, const std::vector<double>& cost) {
  Solution out;
  out.status = status;
  out.iterations = solver.iterations();
  out.basis = solver.basis();
  out.x.assign(structural, 0.0);
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    if (out.basis[i] < structural) out.x[out.basis[i]] = solver.basic_values()[i];
  }
  for (std::size_t j = 0; j < structural; ++j) out.objective += cost[j] * out.x[j];
  return out;
}

}  // namespace

Solution solve(const LinearProgram& lp, std::span<const std::size_t> initial_basis, const Options& options) {
  check_shape(lp);
  RevisedSimplex solver(lp.rows, lp.columns, lp.rhs, options);
  solver.set_basis(initial_basis);
  const std::vector<bool> allowed(lp.cols(), true);
  const Status status = solver.optimize(lp.cost, allowed);
  return finish(solver, status, lp.cols(), lp.cost);
}

Solution solve(const LinearProgram& lp, const Options& options) {
  check_shape(lp);
  const std::size_t n = lp.cols();
  const std::size_t m = lp.rows;
  std::vector<Column> columns = lp.columns;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    columns.push_back({{i, lp.rhs[i] < 0.0 ? -1.0 : 1.0}});
    basis[i] = n + i;
  }
  std::vector<double> phase1(n + m, 0.0);
  std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(n), phase1.end(), 1.0);

  RevisedSimplex solver(m, std::move(columns), lp.rhs, options);
  solver.set_basis(basis);
  std::vector<bool> allowed(n + m, true);
  Status status = solver.optimize(phase1, allowed);
  if (status == Status::iteration_limit) return finish(solver, status, n, lp.cost);

  double infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (solver.basis()[i] >= n) infeasibility += solver.basic_values()[i];
  }
  double scale = 1.0;
  for (double v : lp.rhs) scale = std::max(scale, std::abs(v));
  if (infeasibility > 1e-9 * scale) {
    Solution out = finish(solver, Status::infeasible, n, lp.cost);
    return out;
  }

  // Drive zero-level artificials out where a structural column can replace them;
  // those that remain sit on redundant rows and stay at zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (solver.basis()[r] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      bool basic = false;
      for (std::size_t b : solver.basis()) basic = basic || b == j;
      if (basic) continue;
      if (std::abs(solver.tableau_entry(r, j)) > 1e-9) {
        solver.pivot_in(j, r);
        break;
      }
    }
  }

  std::fill(allowed.begin() + static_cast<std::ptrdiff_t>(n), allowed.end(), false);
  std::vector<double> phase2 = lp.cost;
  phase2.resize(n + m, 0.0);
  status = solver.optimize(phase2, allowed);
  return finish(solver, status, n, lp.cost);
}

}  // namespace gmt::lp
