#ifndef SIDONLAB_MINIMAX_HPP
#define SIDONLAB_MINIMAX_HPP

#include <cstdint>
#include <vector>

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

// Minimizes the sup norm over coefficient vectors with moduli sum 1:
// multi-start projected subgradient descent on the grid maximum of |f|,
// followed by a compass-search polish of the best start and a certified
// evaluation of the result.

struct MinimaxConfig {
  int starts = 64;
  std::size_t grid = 2048; // sampling grid during descent
  int iters = 5000;
  std::uint64_t seed = 20240101;
  double cert_rel_slack = 5e-7; // slack of the final certificate
};

struct MinimaxResult {
  TrigPolynomial witness; // moduli sum 1 (to roundoff)
  double value = 0.0;     // certified sup norm; upper bound on the minimax
  std::vector<double> per_start_values;
  int best_start = -1;
};

MinimaxResult minimax_optimize(const FrequencySet& fs,
                               const MinimaxConfig& cfg = {});

// 1/value: a lower bound on the Sidon constant.
double sidon_estimate(const FrequencySet& fs, const MinimaxConfig& cfg = {});

} // namespace sidonlab

#endif
