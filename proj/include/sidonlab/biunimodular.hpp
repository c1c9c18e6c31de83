#ifndef SIDONLAB_BIUNIMODULAR_HPP
#define SIDONLAB_BIUNIMODULAR_HPP

#include <cstddef>
#include <vector>

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

struct BiunimodularCandidate {
  std::vector<cplx> entries;
  std::size_t size() const { return entries.size(); }
};

// Normalized DFT, kernel e^{-2*pi*i*j*k/n} / sqrt(n).
std::vector<cplx> unitary_dft(const std::vector<cplx>& u);

// All |u_j| = 1 and all |u^_k| = 1 within tol.
bool is_biunimodular(const BiunimodularCandidate& u, double tol = 1e-10);

// Quadratic-phase sequence u_j = e^{2*pi*i*j^2/n} (odd n) or e^{pi*i*j^2/n}
// (even n); verified biunimodular at 1e-10 before returning, and throws
// with the offending transform modulus otherwise.
BiunimodularCandidate gauss_sequence(std::size_t n);

// Max entry of H*H - n*Id for the circulant H[j][k] = u_{(j-k) mod n};
// below tol iff u is biunimodular.
bool circulant_hadamard_check(const BiunimodularCandidate& u,
                              double tol = 1e-10);
double circulant_hadamard_residual(const BiunimodularCandidate& u);

// Equality test for the averaging step of the sqrt(n-1) bound on
// {0,...,N}: the N sums |sum_{j<N} e^{-2*pi*i*j*k/N} l_j| all coincide
// (within 1e-9) iff (l_j)_{j<N} is biunimodular. Values l_0..l_N must be
// unimodular with l_0 = l_N.
bool ytt_equality_check(const std::vector<cplx>& values, std::size_t N);

} // namespace sidonlab

#endif
