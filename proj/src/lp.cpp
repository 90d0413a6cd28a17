#include "rectcolor/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rectcolor/errors.hpp"

namespace rectcolor {

LpResult solve_packing_lp(const PackingLp& lp, double tolerance, long max_pivots) {
  const std::size_t rows = lp.rows.size();
  const std::size_t cols = lp.objective.size();
  constexpr double kEps = 1e-12;
  if (max_pivots < 0) max_pivots = 50 * static_cast<long>(rows + cols) + 1000;

  // x_B[r] = b[r] - sum_j t[r][j] x_N[j];  z = z0 + sum_j c[j] x_N[j].
  std::vector<std::vector<double>> t = lp.rows;
  std::vector<double> b = lp.rhs, c = lp.objective;
  double z0 = 0.0;
  std::vector<std::size_t> basic(rows), nonbasic(cols);
  for (std::size_t j = 0; j < cols; ++j) nonbasic[j] = j;
  for (std::size_t r = 0; r < rows; ++r) {
    basic[r] = cols + r;
    if (t[r].size() != cols || b[r] < 0) throw SolverFailure("malformed packing LP");
  }

  LpResult out;
  for (;; ++out.pivots) {
    if (out.pivots > max_pivots)
      throw SolverFailure("simplex exceeded " + std::to_string(max_pivots) + " pivots");
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (c[j] > kEps && (enter == cols || nonbasic[j] < nonbasic[enter])) enter = j;
    if (enter == cols) break;

    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= kEps) continue;
      double ratio = std::max(b[r], 0.0) / t[r][enter];
      if (leave == rows || ratio < best - kEps ||
          (ratio <= best + kEps && basic[r] < basic[leave])) {
        if (ratio < best) best = ratio;
        leave = r;
      }
    }
    if (leave == rows) throw SolverFailure("packing LP is unbounded");

    auto& prow = t[leave];
    const double piv = prow[enter];
    for (std::size_t j = 0; j < cols; ++j) prow[j] = j == enter ? 1.0 / piv : prow[j] / piv;
    b[leave] /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double a = t[r][enter];
      if (a == 0.0) continue;
      auto& row = t[r];
      for (std::size_t j = 0; j < cols; ++j) row[j] = j == enter ? -a * prow[j] : row[j] - a * prow[j];
      b[r] -= a * b[leave];
    }
    const double ce = c[enter];
    for (std::size_t j = 0; j < cols; ++j) c[j] = j == enter ? -ce * prow[j] : c[j] - ce * prow[j];
    z0 += ce * b[leave];
    std::swap(basic[leave], nonbasic[enter]);
  }

  out.x.assign(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    if (basic[r] < cols) out.x[basic[r]] = std::max(b[r], 0.0);
  out.duals.assign(rows, 0.0);
  for (std::size_t j = 0; j < cols; ++j)
    if (nonbasic[j] >= cols) out.duals[nonbasic[j] - cols] = std::max(-c[j], 0.0);

  out.objective = 0.0;
  for (std::size_t j = 0; j < cols; ++j) out.objective += lp.objective[j] * out.x[j];
  for (std::size_t r = 0; r < rows; ++r) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < cols; ++j) lhs += lp.rows[r][j] * out.x[j];
    if (lhs > lp.rhs[r] + tolerance)
      throw SolverFailure("simplex result violates row " + std::to_string(r) + " by " +
                          std::to_string(lhs - lp.rhs[r]));
  }

  // Scale the dual vector until it covers every objective coefficient.
  double scale = 1.0, dual_value = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (lp.objective[j] <= 0) continue;
    double cover = 0.0;
    for (std::size_t r = 0; r < rows; ++r) cover += out.duals[r] * lp.rows[r][j];
    if (cover <= 0) throw SolverFailure("dual certificate leaves column " + std::to_string(j) + " uncovered");
    scale = std::max(scale, lp.objective[j] / cover);
  }
  for (std::size_t r = 0; r < rows; ++r) dual_value += out.duals[r] * lp.rhs[r];
  out.dual_bound = scale * dual_value;
  return out;
}

}  // namespace rectcolor
