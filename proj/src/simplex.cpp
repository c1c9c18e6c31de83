#include "sidonlab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sidonlab {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;

struct Tableau {
  const LpProblem* lp;
  std::size_t m;
  std::size_t n_total; // real columns + m artificials
  std::vector<double> binv;  // m x m, row-major
  std::vector<std::size_t> basis;
  std::vector<double> brhs;  // b with rows flipped to be nonnegative
  std::vector<int> rowsign;

  double col(std::size_t r, std::size_t j) const {
    if (j < lp->cols) return double(rowsign[r]) * lp->at(r, j);
    return j - lp->cols == r ? 1.0 : 0.0; // artificial
  }

  void multiply_binv(const std::size_t j, std::vector<double>& out) const {
    for (std::size_t r = 0; r < m; ++r) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) acc += binv[r * m + k] * col(k, j);
      out[r] = acc;
    }
  }

  std::vector<double> basic_values() const {
    std::vector<double> x(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) acc += binv[r * m + k] * brhs[k];
      x[r] = acc;
    }
    return x;
  }

  void refactor() {
    // Rebuild binv from the basis by Gauss-Jordan for numerical hygiene.
    std::vector<double> mat(m * 2 * m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < m; ++j) mat[r * 2 * m + j] = col(r, basis[j]);
      mat[r * 2 * m + m + r] = 1.0;
    }
    for (std::size_t p = 0; p < m; ++p) {
      std::size_t piv = p;
      for (std::size_t r = p + 1; r < m; ++r)
        if (std::abs(mat[r * 2 * m + p]) > std::abs(mat[piv * 2 * m + p]))
          piv = r;
      if (std::abs(mat[piv * 2 * m + p]) < 1e-14)
        throw std::runtime_error("simplex: singular basis");
      if (piv != p)
        for (std::size_t j = 0; j < 2 * m; ++j)
          std::swap(mat[p * 2 * m + j], mat[piv * 2 * m + j]);
      const double d = mat[p * 2 * m + p];
      for (std::size_t j = 0; j < 2 * m; ++j) mat[p * 2 * m + j] /= d;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == p) continue;
        const double f = mat[r * 2 * m + p];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < 2 * m; ++j)
          mat[r * 2 * m + j] -= f * mat[p * 2 * m + j];
      }
    }
    // The inverse of the COLUMN basis matrix: we eliminated [B | I] row-wise,
    // so the right block is B^{-1}.
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < m; ++j)
        binv[r * m + j] = mat[r * 2 * m + m + j];
  }
};

// One simplex phase. Only columns below price_limit may enter the basis,
// which keeps the artificials out in phase 2.
LpStatus run_phase(Tableau& t, const std::vector<double>& cost,
                   std::size_t price_limit, std::size_t max_iters,
                   std::size_t& iter_count) {
  const std::size_t m = t.m;
  std::vector<double> y(m), d(m);
  std::vector<char> in_basis(t.n_total, 0);
  for (std::size_t r = 0; r < m; ++r) in_basis[t.basis[r]] = 1;
  std::size_t degenerate_streak = 0;

  for (std::size_t it = 0; it < max_iters; ++it) {
    ++iter_count;
    if (iter_count % 256 == 0) t.refactor();

    // duals y = c_B * binv
    for (std::size_t k = 0; k < m; ++k) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m; ++r)
        acc += cost[t.basis[r]] * t.binv[r * m + k];
      y[k] = acc;
    }

    const bool bland = degenerate_streak > 200;
    std::size_t enter = t.n_total;
    double best_red = -kCostTol;
    for (std::size_t j = 0; j < price_limit; ++j) {
      if (in_basis[j]) continue;
      double red = cost[j];
      for (std::size_t r = 0; r < m; ++r) red -= y[r] * t.col(r, j);
      if (red < best_red) {
        best_red = red;
        enter = j;
        if (bland) break; // first improving index
      }
    }
    if (enter == t.n_total) return LpStatus::optimal;

    t.multiply_binv(enter, d);
    const auto xb = t.basic_values();
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (d[r] > kPivotTol) {
        const double ratio = std::max(xb[r], 0.0) / d[r];
        if (leave == m || ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && t.basis[r] < t.basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) return LpStatus::unbounded;
    degenerate_streak = best_ratio < 1e-12 ? degenerate_streak + 1 : 0;

    // pivot: binv row update
    const double piv = d[leave];
    for (std::size_t j = 0; j < m; ++j) t.binv[leave * m + j] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = d[r];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j)
        t.binv[r * m + j] -= f * t.binv[leave * m + j];
    }
    in_basis[t.basis[leave]] = 0;
    in_basis[enter] = 1;
    t.basis[leave] = enter;
  }
  return LpStatus::iteration_limit;
}

} // namespace

LpResult solve_lp(const LpProblem& lp, std::size_t max_iterations) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows ||
      lp.c.size() != lp.cols)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");

  Tableau t;
  t.lp = &lp;
  t.m = lp.rows;
  t.n_total = lp.cols + lp.rows;
  t.binv.assign(lp.rows * lp.rows, 0.0);
  t.basis.resize(lp.rows);
  t.brhs.resize(lp.rows);
  t.rowsign.resize(lp.rows);
  for (std::size_t r = 0; r < lp.rows; ++r) {
    t.rowsign[r] = lp.b[r] >= 0.0 ? 1 : -1;
    t.brhs[r] = std::abs(lp.b[r]);
    t.basis[r] = lp.cols + r;
    t.binv[r * lp.rows + r] = 1.0;
  }

  LpResult res;

  // Phase 1: drive the artificial variables to zero.
  std::vector<double> cost1(t.n_total, 0.0);
  for (std::size_t j = lp.cols; j < t.n_total; ++j) cost1[j] = 1.0;
  LpStatus st =
      run_phase(t, cost1, t.n_total, max_iterations, res.iterations);
  if (st != LpStatus::optimal) {
    res.status = st;
    return res;
  }
  {
    const auto xb = t.basic_values();
    double art = 0.0;
    for (std::size_t r = 0; r < lp.rows; ++r)
      if (t.basis[r] >= lp.cols) art += std::abs(xb[r]);
    if (art > 1e-7) {
      res.status = LpStatus::infeasible;
      return res;
    }
  }

  // Phase 2: original objective; artificials may stay basic at zero but
  // never re-enter.
  std::vector<double> cost2(t.n_total, 0.0);
  for (std::size_t j = 0; j < lp.cols; ++j) cost2[j] = lp.c[j];
  st = run_phase(t, cost2, lp.cols, max_iterations, res.iterations);
  res.status = st;
  if (st != LpStatus::optimal) return res;

  res.x.assign(lp.cols, 0.0);
  const auto xb = t.basic_values();
  for (std::size_t r = 0; r < lp.rows; ++r)
    if (t.basis[r] < lp.cols) res.x[t.basis[r]] = std::max(0.0, xb[r]);
  res.objective = 0.0;
  for (std::size_t j = 0; j < lp.cols; ++j)
    res.objective += lp.c[j] * res.x[j];
  return res;
}

} // namespace sidonlab
