#include "sidonlab/biunimodular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sidonlab {

std::vector<cplx> unitary_dft(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  std::vector<cplx> out(n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      // angle reduced mod n before the trig call to keep 1e-15 accuracy
      const double ang = -two_pi * double((j * k) % n) / double(n);
      acc += u[j] * std::polar(1.0, ang);
    }
    out[k] = acc * scale;
  }
  return out;
}

bool is_biunimodular(const BiunimodularCandidate& u, double tol) {
  if (u.entries.empty())
    throw std::invalid_argument("is_biunimodular: empty sequence");
  for (const auto& e : u.entries)
    if (std::abs(std::abs(e) - 1.0) > tol)
      throw std::invalid_argument("is_biunimodular: entries not unimodular");
  for (const auto& f : unitary_dft(u.entries))
    if (std::abs(std::abs(f) - 1.0) > tol) return false;
  return true;
}

BiunimodularCandidate gauss_sequence(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_sequence: n >= 1");
  BiunimodularCandidate u;
  u.entries.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (n % 2 == 1) {
      u.entries[j] = std::polar(1.0, two_pi * double((j * j) % n) / double(n));
    } else {
      u.entries[j] =
          std::polar(1.0, (two_pi / 2.0) * double((j * j) % (2 * n)) / double(n));
    }
  }
  const auto hat = unitary_dft(u.entries);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(std::abs(hat[k]) - 1.0) > 1e-10) {
      std::ostringstream os;
      os << "gauss_sequence: verification failed at n=" << n << ", |u^_" << k
         << "| = " << std::abs(hat[k]);
      throw std::runtime_error(os.str());
    }
  }
  return u;
}

double circulant_hadamard_residual(const BiunimodularCandidate& u) {
  const std::size_t n = u.size();
  // (H*H)[a][b] = sum_j conj(u_{(j-a) mod n}) u_{(j-b) mod n}
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        acc += std::conj(u.entries[(j + n - a) % n]) *
               u.entries[(j + n - b) % n];
      if (a == b) acc -= double(n);
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

bool circulant_hadamard_check(const BiunimodularCandidate& u, double tol) {
  for (const auto& e : u.entries)
    if (std::abs(std::abs(e) - 1.0) > tol)
      throw std::invalid_argument(
          "circulant_hadamard_check: entries not unimodular");
  return circulant_hadamard_residual(u) < tol;
}

bool ytt_equality_check(const std::vector<cplx>& values, std::size_t N) {
  if (values.size() != N + 1)
    throw std::invalid_argument(
        "ytt_equality_check: need the N+1 values on {0,...,N}");
  for (const auto& v : values)
    if (std::abs(std::abs(v) - 1.0) > 1e-12)
      throw std::invalid_argument("ytt_equality_check: values not unimodular");
  if (std::abs(values.front() - values.back()) > 1e-12)
    throw std::invalid_argument("ytt_equality_check: l(e_0) != l(e_N)");
  if (N == 1) return true;

  double lo = 1e300, hi = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < N; ++j)
      acc += values[j] *
             std::polar(1.0, -two_pi * double((j * k) % N) / double(N));
    const double m = std::abs(acc);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  return hi - lo < 1e-9;
}

} // namespace sidonlab
