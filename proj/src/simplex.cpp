#include "mlsfr/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlsfr {

namespace {

constexpr double kPivotEps = 1e-12;

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : rows_(lp.rows), vars_(lp.cols + lp.rows), width_(vars_ + 1),
        cells_((rows_ + 1) * width_, 0.0), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < lp.cols; ++j) cell(i, j) = lp.at(i, j);
      cell(i, lp.cols + i) = 1.0;
      cell(i, vars_) = lp.b[i];
      basis_[i] = lp.cols + i;
    }
    for (std::size_t j = 0; j < lp.cols; ++j) cell(rows_, j) = -lp.c[j];
  }

  double& cell(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  double cell(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  // Bland: lowest-index column with a negative reduced cost.
  std::size_t entering() const {
    for (std::size_t j = 0; j < vars_; ++j) {
      if (cell(rows_, j) < -kPivotEps) return j;
    }
    return npos;
  }

  // Minimum ratio; ties go to the row whose basic variable has the lowest index.
  std::size_t leaving(std::size_t col) const {
    std::size_t best = npos;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows_; ++i) {
      const double coef = cell(i, col);
      if (coef <= kPivotEps) continue;
      const double ratio = cell(i, vars_) / coef;
      if (best == npos || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / cell(row, col);
    for (std::size_t j = 0; j < width_; ++j) cell(row, j) *= inv;
    cell(row, col) = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double factor = cell(i, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) cell(i, j) -= factor * cell(row, j);
      cell(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  std::vector<double> primal(std::size_t cols) const {
    std::vector<double> x(cols, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols) x[basis_[i]] = std::max(0.0, cell(i, vars_));
    }
    return x;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::size_t rows_;
  std::size_t vars_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.c.size() != lp.cols) {
    throw std::invalid_argument("linear program dimensions are inconsistent");
  }
  for (double bi : lp.b) {
    if (!(bi >= 0.0)) throw std::invalid_argument("right-hand side must be non-negative");
  }

  Tableau tableau(lp);
  LpSolution solution;
  for (;;) {
    const std::size_t col = tableau.entering();
    if (col == Tableau::npos) break;
    const std::size_t row = tableau.leaving(col);
    if (row == Tableau::npos) {
      solution.status = LpStatus::unbounded;
      return solution;
    }
    tableau.pivot(row, col);
    ++solution.pivots;
  }

  solution.x = tableau.primal(lp.cols);
  for (std::size_t j = 0; j < lp.cols; ++j) solution.objective += lp.c[j] * solution.x[j];
  return solution;
}

}  // namespace mlsfr
