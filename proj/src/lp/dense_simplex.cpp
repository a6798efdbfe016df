#include "ricci/lp/dense_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ricci/error.hpp"
#include "ricci/simd/kernels.hpp"

namespace ricci::lp {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : m_(lp.rows), n_(lp.num_vars), width_(lp.num_vars + lp.rows + 1), options_(options),
        data_((lp.rows + 1) * width_, 0.0), basis_(lp.rows), kernels_(simd::active_kernels()) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
      double* row = row_ptr(i);
      for (std::size_t j = 0; j < n_; ++j) row[j] = sign * lp.a[i * n_ + j];
      row[n_ + i] = 1.0;
      row[width_ - 1] = sign * lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  void phase_one() {
    double* obj = row_ptr(m_);
    std::fill(obj, obj + width_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const double* row = row_ptr(i);
      for (std::size_t j = 0; j < n_; ++j) obj[j] -= row[j];
      obj[width_ - 1] -= row[width_ - 1];
    }
    iterate(width_ - 1);
    const double infeasibility = -obj[width_ - 1];
    double scale = 1.0;
    for (std::size_t i = 0; i < m_; ++i) scale = std::max(scale, std::abs(row_ptr(i)[width_ - 1]));
    if (infeasibility > options_.feasibility_tolerance * scale) {
      throw Error(ErrorCode::LpInfeasible, "phase one residual " + std::to_string(infeasibility));
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      const double* row = row_ptr(i);
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(row[j]) > options_.pivot_tolerance) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  void phase_two(const std::vector<double>& c) {
    double* obj = row_ptr(m_);
    std::fill(obj, obj + width_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bj = basis_[i];
      const double cb = bj < n_ ? c[bj] : 0.0;
      if (cb != 0.0) kernels_.sub_scaled(obj, row_ptr(i), cb, width_);
    }
    iterate(n_);
  }

  std::vector<double> solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, data_[i * width_ + width_ - 1]);
    }
    return x;
  }

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  double* row_ptr(std::size_t i) { return data_.data() + i * width_; }

  // Bland: lowest-index improving column, lowest-index basic variable on ratio ties.
  void iterate(std::size_t entering_limit) {
    double* obj = row_ptr(m_);
    while (true) {
      const std::size_t col = kernels_.first_below(obj, entering_limit, -options_.cost_tolerance);
      if (col == entering_limit) return;
      std::size_t leave = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double aic = data_[i * width_ + col];
        if (aic <= options_.pivot_tolerance) continue;
        const double ratio = std::max(0.0, data_[i * width_ + width_ - 1]) / aic;
        if (leave == m_) {
          leave = i;
          best_ratio = ratio;
          continue;
        }
        const double slack = 1e-12 * std::max(1.0, best_ratio);
        if (ratio < best_ratio - slack) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + slack && basis_[i] < basis_[leave]) {
          leave = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leave == m_) throw Error(ErrorCode::LpUnbounded, "column " + std::to_string(col));
      pivot(leave, col);
      if (pivots_ > options_.max_pivots) {
        throw Error(ErrorCode::LpNumericalFailure, "pivot limit exceeded");
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    double* prow = row_ptr(r);
    const double p = prow[c];
    if (!(std::abs(p) > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::LpNumericalFailure, "degenerate pivot element");
    }
    const double inv = 1.0 / p;
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[c] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* row = row_ptr(i);
      const double f = row[c];
      if (f == 0.0) continue;
      kernels_.sub_scaled(row, prow, f, width_);
      row[c] = 0.0;
    }
    basis_[r] = c;
    ++pivots_;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  SimplexOptions options_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  const simd::KernelTable& kernels_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve_dense_simplex(const LinearProgram& lp, const SimplexOptions& options) {
  if (lp.a.size() != lp.rows * lp.num_vars || lp.b.size() != lp.rows || lp.c.size() != lp.num_vars) {
    throw Error(ErrorCode::InvalidConfig, "linear program dimensions are inconsistent");
  }
  Tableau tableau(lp, options);
  tableau.phase_one();
  tableau.phase_two(lp.c);

  LpResult result;
  result.x = tableau.solution();
  result.pivots = tableau.pivots();
  for (std::size_t j = 0; j < lp.num_vars; ++j) result.objective += lp.c[j] * result.x[j];
  return result;
}

}  // namespace ricci::lp
