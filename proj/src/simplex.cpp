#include "rp/simplex.hpp"

#include <cmath>

#include "rp/errors.hpp"

namespace rp {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-12;

// Tableau layout: rows 0..r-1 are constraints, row r is the reduced-cost
// row. Columns 0..n-1 structural, n..n+r-1 artificial, last column rhs.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs, std::size_t n)
      : r_(rows.size()), n_(n), width_(n + r_ + 1), t_((r_ + 1) * width_, 0.0), basis_(r_) {
    for (std::size_t i = 0; i < r_; ++i) {
      const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * rows[i][j];
      at(i, n_ + i) = 1.0;
      at(i, width_ - 1) = sign * rhs[i];
      basis_[i] = n_ + i;
    }
  }

  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  std::size_t rows() const { return r_; }
  std::size_t structural() const { return n_; }
  std::size_t rhs_col() const { return width_ - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced costs for the given column costs (artificials included).
  void price(const std::vector<double>& full_cost) {
    for (std::size_t j = 0; j < width_; ++j) {
      double v = j + 1 < width_ ? full_cost[j] : 0.0;
      for (std::size_t i = 0; i < r_; ++i) v -= full_cost[basis_[i]] * at(i, j);
      at(r_, j) = v;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i <= r_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
    }
    basis_[row] = col;
  }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  LpStatus iterate(std::size_t allowed, std::size_t max_pivots, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (at(r_, j) < -kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return LpStatus::kOptimal;
      if (pivots >= max_pivots) return LpStatus::kIterationLimit;

      std::size_t leave = r_;
      double best = 0.0;
      for (std::size_t i = 0; i < r_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = at(i, rhs_col()) / a;
        if (leave == r_ || ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == r_) return LpStatus::kUnbounded;
      pivot(leave, enter);
      ++pivots;
    }
  }

 private:
  std::size_t r_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_form(const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs,
                             const std::vector<double>& cost, std::size_t max_pivots) {
  const std::size_t r = rows.size();
  const std::size_t n = cost.size();
  if (rhs.size() != r) throw PreconditionError("simplex: rhs length mismatch");
  for (const auto& row : rows)
    if (row.size() != n) throw PreconditionError("simplex: row length mismatch");

  Tableau tab(rows, rhs, n);
  LpResult result;

  // Phase 1: minimize the sum of artificials.
  std::vector<double> phase1(n + r, 0.0);
  for (std::size_t i = 0; i < r; ++i) phase1[n + i] = 1.0;
  tab.price(phase1);
  LpStatus s = tab.iterate(n + r, max_pivots, result.pivots);
  if (s == LpStatus::kIterationLimit) {
    result.status = s;
    return result;
  }
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < r; ++i)
    if (tab.basis()[i] >= n) infeasibility += tab.at(i, tab.rhs_col());
  double scale = 1.0;
  for (double v : rhs) scale += std::abs(v);
  if (infeasibility > 1e-9 * scale) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < r; ++i) {
    if (tab.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(tab.at(i, j)) > kPivotEps) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2: artificials keep zero cost and may not re-enter.
  std::vector<double> phase2(n + r, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
  tab.price(phase2);
  s = tab.iterate(n, max_pivots, result.pivots);
  result.status = s;
  if (s != LpStatus::kOptimal) return result;

  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    if (tab.basis()[i] < n) result.x[tab.basis()[i]] = tab.at(i, tab.rhs_col());
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += cost[j] * result.x[j];

  // Artificial column i has reduced cost 0 - y^T (sign_i e_i).
  result.dual.assign(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
    result.dual[i] = -tab.at(r, n + i) * sign;
  }
  return result;
}

}  // namespace rp
