#pragma once

// Dense two-phase simplex method with Bland's anti-cycling rule for
//   minimize c^T x  subject to  A x = b, x >= 0.
// Intended for few rows and many columns.

#include <cstddef>
#include <vector>

namespace rp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;     // primal solution
  std::vector<double> dual;  // y with A^T y <= c, b^T y = objective
  std::size_t pivots = 0;
};

/// `rows` holds A row by row; every row must have the length of `cost`.
LpResult solve_standard_form(const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs,
                             const std::vector<double>& cost, std::size_t max_pivots = 1000000);

}  // namespace rp
