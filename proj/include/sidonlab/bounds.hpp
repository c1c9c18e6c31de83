#ifndef SIDONLAB_BOUNDS_HPP
#define SIDONLAB_BOUNDS_HPP

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

// sqrt(|Lambda| - 1): the Sidon constant of any n-element set is at most
// sqrt(n - 1). Requires |Lambda| >= 2.
double newman_queffelec_bound(const FrequencySet& fs);

// Instance of the averaging chain
//   max|f|^2 >= (1/N) sum_{w in U_N} |f(zw)|^2
//             = |c_0 + c_{n-1} z^N|^2 + sum |c_j|^2
//            >= (sum |c_j|)^2 / (n-1)
// evaluated at the angle maximizing the average.
struct ChainReport {
  double sup_sq = 0.0;     // lower bound on max|f|^2 including the U_N orbit
  double avg_sq = 0.0;     // U_N average at theta_star
  double decomposed = 0.0; // residue-class form of the same average
  double l1_sq_over = 0.0; // (sum |c_j|)^2 / (n-1)
  double theta_star = 0.0;
};

ChainReport chain_check(const TrigPolynomial& p);

// Whether p witnesses S({0,...,N}) = sqrt(N): certified sup norm within
// 1e-4 of 1/sqrt(N). Requires support in {0..N} and moduli sum 1 (1e-10).
bool shapiro_equality_witness(std::int64_t N, const TrigPolynomial& p);

} // namespace sidonlab

#endif
