#ifndef SIDONLAB_EXTREMAL_FAMILY_HPP
#define SIDONLAB_EXTREMAL_FAMILY_HPP

#include <array>
#include <string>
#include <vector>

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

// One-parameter family of degree-3 polynomials on {0,1,2,3} whose
// coefficient moduli sum to 1 and whose sup norm is 3/5 for every tau.
// Phi(t, tau) = |f(e^{it}, tau)|^2 has global maximum 9/25 attained, for
// each tau, at exactly three t; the remaining critical points are a global
// minimum 0 at (pi, 0), a local minimum 49/225 at (0, pi/2) and a saddle
// 5/18 at (arccos(1/4), arccos(17/37)/2).

struct FamilyParameter {
  double tau = 0.0;
  // Canonical representative in [0, pi/2]. Phi is pi-periodic in tau and
  // Phi(t, -tau) = Phi(-t, tau), so every tau reduces into that range.
  FamilyParameter reduced() const;
};

enum class CriticalKind {
  global_max,
  global_min,
  local_min,
  saddle,
  degenerate,
};

std::string to_string(CriticalKind k);

struct CriticalPoint {
  double t = 0.0;
  double tau = 0.0;
  double value = 0.0;
  CriticalKind kind = CriticalKind::degenerate;
};

struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
  double det() const { return a11 * a22 - a12 * a21; }
};

struct PhaseSolution {
  double cos2tau = 0.0;
  double sin2tau = 0.0;
};

struct SymmetryReport {
  double reflection_residual = 0.0;  // |f(z,-tau) - z^3 f(1/z, tau)|
  double conjugation_residual = 0.0; // |f(z,tau+pi) - z^3 conj(f(z,tau))|
};

// Coefficients of f(., tau) on {0,1,2,3}.
TrigPolynomial family_coefficients(double tau);

// Closed form of |f(e^{it}, tau)|^2.
double phi(double t, double tau);

// Central-difference gradient of phi, step 1e-6.
std::array<double, 2> phi_gradient(double t, double tau);

// Coefficient matrix of the critical-point system
//   M * (cos 2tau, sin 2tau)^T = (rhs, 0)^T.
Mat2 matrix_M(double t);
double critical_rhs(double t);

// Closed form of det M; the factored product vanishes exactly where
// cos t is -1, 1/4 or 1.
double det_M(double t);

// The unique unit vector (cos 2tau, sin 2tau) solving the critical system
// away from the det M degeneracies. Rejects t within 1e-9 of them.
PhaseSolution cs_rhs(double t);

// Continuous extension of the same quotients: the printed forms already
// cancel the common roots, so they evaluate at the degeneracies and give
// the tabulated limits C(0) = 1, C(pi) = -1.
PhaseSolution cs_limit(double t);

// All critical points of Phi(., tau) after reducing tau to [0, pi/2]:
// three global maxima of value 9/25 plus, at the special tau, the
// minimum / local minimum / saddle.
std::vector<CriticalPoint> critical_points(double tau);

// Classification by the eigenvalue signs of the finite-difference Hessian
// (step 1e-5, degeneracy threshold 1e-7 on |eigenvalue|). Requires a
// critical point: gradient norm < 1e-6.
CriticalKind classify(double t, double tau);

// Residuals of the two family symmetries at z = e^{i theta}.
SymmetryReport verify_symmetries(double tau, double theta);

// Distance from c to the family orbit: minimum over tau, global phase,
// rotation z -> e^{ia} z and coefficient reversal of the l2 coefficient
// distance. Used to cross-check minimax witnesses on {0,1,2,3}.
double family_distance(const TrigPolynomial& p);

} // namespace sidonlab

#endif
