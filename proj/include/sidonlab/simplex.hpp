#ifndef SIDONLAB_SIMPLEX_HPP
#define SIDONLAB_SIMPLEX_HPP

#include <cstddef>
#include <vector>

namespace sidonlab {

// Dense two-phase revised simplex for
//   min c.x  s.t.  A x = b,  x >= 0
// with a small row count (the measure programs have 2|Lambda| rows).
// Deterministic: Dantzig pricing with a Bland fallback after long
// degenerate stalls, smallest-index tie breaking in the ratio test.

struct LpProblem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a; // column-major, rows * cols
  std::vector<double> b;
  std::vector<double> c;

  double& at(std::size_t r, std::size_t col) { return a[col * rows + r]; }
  double at(std::size_t r, std::size_t col) const { return a[col * rows + r]; }
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

LpResult solve_lp(const LpProblem& lp, std::size_t max_iterations = 50000);

} // namespace sidonlab

#endif
