#include "sidonlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sidonlab {

double newman_queffelec_bound(const FrequencySet& fs) {
  if (fs.size() < 2)
    throw std::invalid_argument("newman_queffelec_bound: need |Lambda| >= 2");
  return std::sqrt(double(fs.size()) - 1.0);
}

namespace {

// Residue-class decomposition of the U_N average of |f(e^{i theta} .)|^2.
// Within a normalized support only 0 and N can share a class mod N.
double residue_decomposition(const TrigPolynomial& p, std::int64_t N,
                             double theta) {
  double acc = 0.0;
  std::vector<bool> used(p.size(), false);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (used[j]) continue;
    cplx sum(0.0, 0.0);
    for (std::size_t k = j; k < p.size(); ++k) {
      if (((p.support[k] - p.support[j]) % N) == 0) {
        sum += p.coefficients[k] *
               std::polar(1.0, double(p.support[k]) * theta);
        used[k] = true;
      }
    }
    acc += std::norm(sum);
  }
  return acc;
}

} // namespace

ChainReport chain_check(const TrigPolynomial& p) {
  const TrigPolynomial q = p.normalized();
  if (q.size() < 2 || q.support.max() < 1)
    throw std::invalid_argument("chain_check: need max frequency >= 1");
  const std::int64_t N = q.support.max();
  const std::size_t n = q.size();

  // The average is A + 2 Re(conj(c_0) c_{n-1} e^{iN theta}) + const, so its
  // argmax is where the endpoint coefficients align; refine the grid argmax
  // with the exact alignment angle.
  const cplx cross = std::conj(q.coefficients.front()) * q.coefficients.back();
  double theta_star = 0.0;
  if (std::abs(cross) > 0.0)
    theta_star = canonical_angle(-std::arg(cross) / double(N));

  ChainReport rep;
  rep.theta_star = theta_star;
  rep.avg_sq = roots_of_unity_average(q, std::size_t(N), theta_star);
  rep.decomposed = residue_decomposition(q, N, theta_star);
  rep.l1_sq_over =
      moduli_sum(q) * moduli_sum(q) / (double(n) - 1.0);

  // max over the U_N orbit of theta_star dominates the average exactly;
  // fold in a certified scan as well.
  double orbit_max = 0.0;
  for (std::int64_t k = 0; k < N; ++k) {
    const double th = theta_star + two_pi * double(k) / double(N);
    orbit_max = std::max(orbit_max, std::abs(evaluate(q, th)));
  }
  std::size_t g = 1 << 14;
  while (double(g) < 13.0 * double(N)) g <<= 1;
  const auto cert = sup_norm(q, g);
  const double sup = std::max(orbit_max, cert.grid_max);
  rep.sup_sq = sup * sup;
  return rep;
}

bool shapiro_equality_witness(std::int64_t N, const TrigPolynomial& p) {
  if (N < 1) throw std::invalid_argument("shapiro_equality_witness: N >= 1");
  if (p.support.min() < 0 || p.support.max() > N)
    throw std::invalid_argument(
        "shapiro_equality_witness: support must lie in {0,...,N}");
  if (std::abs(moduli_sum(p) - 1.0) > 1e-10)
    throw std::invalid_argument(
        "shapiro_equality_witness: moduli sum must be 1");
  const auto cert = sup_norm_auto(p, 1e-6);
  return std::abs(cert.certified_upper - 1.0 / std::sqrt(double(N))) < 1e-4;
}

} // namespace sidonlab
