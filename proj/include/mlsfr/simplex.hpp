#pragma once

#include <cstddef>
#include <vector>

namespace mlsfr {

/// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0.
///
/// b >= 0 makes the origin feasible, so no phase one is needed. A is dense
/// and row-major.
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // rows * cols
  std::vector<double> b;  // rows
  std::vector<double> c;  // cols

  LinearProgram(std::size_t rows_, std::size_t cols_)
      : rows(rows_), cols(cols_), a(rows_ * cols_, 0.0), b(rows_, 0.0), c(cols_, 0.0) {}

  double& at(std::size_t row, std::size_t col) { return a[row * cols + col]; }
  double at(std::size_t row, std::size_t col) const { return a[row * cols + col]; }
};

enum class LpStatus { optimal, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Dense tableau simplex with Bland's rule. Bland's rule cannot cycle and
/// always picks the lowest eligible index, so the returned vertex depends
/// only on the input.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace mlsfr
