#ifndef SIDONLAB_DUALITY_HPP
#define SIDONLAB_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

// Functional on C_Lambda(T) given by its values on the characters z^j.
struct DualFunctional {
  FrequencySet support;
  std::vector<cplx> values;

  DualFunctional() = default;
  DualFunctional(FrequencySet s, std::vector<cplx> v);

  bool is_unimodular(double tol = 1e-12) const;
  bool is_real_signed() const; // all values in {-1, +1}
};

// Weighted Dirac masses on the Nth roots of unity.
struct DiscreteMeasure {
  std::size_t modulus_N = 0;
  std::vector<cplx> weights;

  double total_variation() const;
};

struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
};

// sum_j c_j l(e_j); support(p) must be contained in support(l).
cplx apply(const DualFunctional& l, const TrigPolynomial& p);

// The explicit measure on U_N with Fourier coefficients matching l,
//   b_k = (1/N) sum_r e^{-2*pi*i*r*k/N} * (class value of r),
// classes absent from Lambda contributing 0. Requires l constant on each
// residue class mod N (exact equality of stored values).
DiscreteMeasure lift_to_roots(const DualFunctional& l, std::size_t N);

// Checks l(e_j) = sum_k b_k e^{2*pi*i*j*k/N} for every j in the support.
bool verify_representation(const DiscreteMeasure& mu, const DualFunctional& l,
                           double tol = 1e-10);

// u_k = conj(b_k)/|b_k| (1 where b_k = 0): the unimodular function on U_N
// against which mu attains its total variation.
std::vector<cplx> aligned_phases(const DiscreteMeasure& mu);

struct NormBracketConfig {
  std::size_t measure_grid = 720; // Dirac grid size for the upper program
  std::size_t polygon = 32;       // directions used to linearize |b_k|
  std::size_t search_grid = 4096; // sup-norm grid during the lower search
  double cert_rel_slack = 1e-5;   // certificate slack for the final lower
  int refine_sweeps = 120;        // compass-search budget
  int random_starts = 4;
  bool use_lp = true;
  bool refine = true;
  std::uint64_t seed = 20240101;
};

// Two-sided bracket for ||l||: the lower bound comes from explicit
// polynomials (best |l(p)| / certified sup norm), the upper bound from
// representing measures (the U_N lifting after an aligning rotation, and
// a total-variation linear program over Dirac atoms on a circle grid).
struct NormComputation {
  NormBracket bracket;
  TrigPolynomial witness;          // realizes the lower bound
  std::optional<double> lp_upper;  // measure-program value, if run
  std::optional<double> lift_upper;
  std::string notes;               // non-fatal diagnostics, e.g. LP skipped
};

NormComputation norm_bracket(const DualFunctional& l,
                             const NormBracketConfig& cfg = {});

// Supremum of ||l|| over sign patterns l(e_j) in {-1,+1}, quotiented by
// l -> -l and the half-turn twist l(e_j) -> (-1)^{lambda_j} l(e_j).
// For {0,1,2,3} the U_3 lifting argument is used directly: the three
// non-Dirac class patterns all lift with total variation 5/3 and the
// aligned images of the tau = pi/2 family polynomial (sup norm 3/5)
// supply the matching lower bound. Requires |Lambda| <= 16.
NormComputation real_unconditional_constant(const FrequencySet& fs);

// Bracket for the Sidon constant: lower from sampled/optimized unimodular
// functionals (and 1/minimax as a cross-check), upper from the
// sqrt(n-1) bound, which is the only valid upper bound for a supremum
// over all unimodular functionals. Requires |Lambda| <= 6.
struct SidonBracketConfig {
  NormBracketConfig inner;
  int random_phase_samples = 32;
  bool use_minimax = true;
  std::uint64_t seed = 20240101;
};

NormComputation sidon_constant_bracket(const FrequencySet& fs,
                                       const SidonBracketConfig& cfg = {});

} // namespace sidonlab

#endif
