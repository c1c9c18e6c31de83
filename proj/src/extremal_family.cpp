#include "sidonlab/extremal_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sidonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kGlobalMax = 0.36; // 9/25

// t with cos t = -1/4 and cos t = 1/4.
const double kTCosNegQuarter = std::acos(-0.25);
const double kTCosQuarter = std::acos(0.25);
// Saddle parameter arccos(17/37)/2.
const double kTauSaddle = 0.5 * std::acos(17.0 / 37.0);

} // namespace

FamilyParameter FamilyParameter::reduced() const {
  double r = std::fmod(tau, kPi); // Phi is pi-periodic in tau
  if (r < 0.0) r += kPi;
  if (r > kPi / 2.0) r = kPi - r; // Phi(t, pi - tau) = Phi(-t, tau)
  return FamilyParameter{r};
}

std::string to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::global_max: return "global-max";
    case CriticalKind::global_min: return "global-min";
    case CriticalKind::local_min: return "local-min";
    case CriticalKind::saddle: return "saddle";
    case CriticalKind::degenerate: return "degenerate";
  }
  return "unknown";
}

TrigPolynomial family_coefficients(double tau) {
  const double st = std::sin(tau);
  const double ct = std::cos(tau);
  const double im = 2.0 * kSqrt2 * ct / 15.0;
  std::vector<cplx> c = {
      cplx((-1.0 - 3.0 * st) / 15.0, im),
      cplx((3.0 + st) / 10.0, 0.0),
      cplx((3.0 - st) / 10.0, 0.0),
      cplx((-1.0 + 3.0 * st) / 15.0, im),
  };
  return TrigPolynomial(FrequencySet({0, 1, 2, 3}), std::move(c));
}

double phi(double t, double tau) {
  const double s1 = std::sin(t), s2 = std::sin(2.0 * t), s3 = std::sin(3.0 * t);
  const double c1 = std::cos(t), c2 = std::cos(2.0 * t), c3 = std::cos(3.0 * t);
  const double S = std::sin(2.0 * tau), C = std::cos(2.0 * tau);
  return (2.0 * kSqrt2 * S / 75.0) * (s1 - s2 + 2.0 * s3) +
         (247.0 - 13.0 * C) / 900.0 +
         (1.0 + C) * (c1 / 20.0 - c2 / 25.0) +
         ((1.0 + 17.0 * C) / 225.0) * c3;
}

std::array<double, 2> phi_gradient(double t, double tau) {
  const double h = 1e-6;
  return {(phi(t + h, tau) - phi(t - h, tau)) / (2.0 * h),
          (phi(t, tau + h) - phi(t, tau - h)) / (2.0 * h)};
}

Mat2 matrix_M(double t) {
  const double s1 = std::sin(t), s2 = std::sin(2.0 * t), s3 = std::sin(3.0 * t);
  const double c1 = std::cos(t), c2 = std::cos(2.0 * t), c3 = std::cos(3.0 * t);
  Mat2 m;
  m.a11 = 2.0 * s2 / 25.0 - s1 / 20.0 - 17.0 * s3 / 75.0;
  m.a12 = (2.0 * kSqrt2 / 75.0) * (c1 - 2.0 * c2 + 6.0 * c3);
  m.a21 = (2.0 * kSqrt2 / 75.0) * (s1 - s2 + 2.0 * s3);
  m.a22 = 13.0 / 900.0 - c1 / 20.0 + c2 / 25.0 - 17.0 * c3 / 225.0;
  return m;
}

double critical_rhs(double t) {
  return std::sin(t) / 20.0 - 2.0 * std::sin(2.0 * t) / 25.0 +
         std::sin(3.0 * t) / 75.0;
}

double det_M(double t) {
  const double c = std::cos(t);
  const double cubic = 16.0 * c * c * c - 72.0 * c * c + 33.0 * c - 41.0;
  return (1.0 / 67500.0) * std::sin(t) * (c - 0.25) * (4.0 * c - 11.0) * cubic;
}

namespace {

// The factored quotients are finite on all of [-1, 1] (the cubic denominator
// has no real root there), so these evaluate everywhere; the public guard in
// cs_rhs only marks where the critical system itself degenerates.
PhaseSolution cs_value(double t) {
  const double c = std::cos(t);
  const double den = 16.0 * c * c * c - 72.0 * c * c + 33.0 * c - 41.0;
  PhaseSolution ps;
  ps.cos2tau = -(272.0 * c * c * c - 72.0 * c * c - 159.0 * c + 23.0) / den;
  ps.sin2tau =
      -24.0 * kSqrt2 * std::sin(t) * (4.0 * c + 1.0) * (2.0 * c - 1.0) / den;
  return ps;
}

} // namespace

PhaseSolution cs_rhs(double t) {
  const double tc = canonical_angle(t);
  const double fold = tc <= kPi ? tc : two_pi - tc; // +-t have equal cos
  for (double bad : {0.0, kTCosQuarter, kPi}) {
    if (std::abs(fold - bad) < 1e-9)
      throw std::invalid_argument(
          "cs_rhs: t is a det M degeneracy (cos t in {-1, 1/4, 1})");
  }
  return cs_value(t);
}

PhaseSolution cs_limit(double t) { return cs_value(t); }

namespace {

// Root of C(t) - target on [lo, hi]; endpoint signs must differ.
double bisect_cs(double lo, double hi, double target) {
  auto g = [target](double t) { return cs_value(t).cos2tau - target; };
  double flo = g(lo), fhi = g(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::logic_error("bisect_cs: endpoints do not bracket a root");
  double a = lo, b = hi;
  for (int i = 0; i < 200 && (b - a) > 1e-15; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = g(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      a = mid;
      flo = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

CriticalPoint make_point(double t, double tau, CriticalKind kind) {
  return CriticalPoint{canonical_angle(t), tau, phi(t, tau), kind};
}

} // namespace

std::vector<CriticalPoint> critical_points(double tau) {
  const double r = FamilyParameter{tau}.reduced().tau;
  std::vector<CriticalPoint> pts;

  const double eps = 1e-9;
  if (r < eps) {
    // tau = 0: C(t) = 1 at t = 0 and t = +-arccos(-1/4); minimum at pi.
    pts.push_back(make_point(0.0, r, CriticalKind::global_max));
    pts.push_back(make_point(kTCosNegQuarter, r, CriticalKind::global_max));
    pts.push_back(make_point(-kTCosNegQuarter, r, CriticalKind::global_max));
    pts.push_back(make_point(kPi, r, CriticalKind::global_min));
    return pts;
  }
  if (r > kPi / 2.0 - eps) {
    // tau = pi/2: C(t) = -1 at t = +-pi/3 and t = pi; local minimum at 0.
    pts.push_back(make_point(kPi / 3.0, r, CriticalKind::global_max));
    pts.push_back(make_point(-kPi / 3.0, r, CriticalKind::global_max));
    pts.push_back(make_point(kPi, r, CriticalKind::global_max));
    pts.push_back(make_point(0.0, r, CriticalKind::local_min));
    return pts;
  }

  // Generic tau: C crosses cos 2tau once in each of the three intervals cut
  // by C(0)=1, C(pi/3)=-1, C(arccos(-1/4))=1, C(pi)=-1. The sign of t is
  // then fixed by S(t) = sin 2tau.
  const double target_c = std::cos(2.0 * r);
  const double target_s = std::sin(2.0 * r);
  const std::array<std::pair<double, double>, 3> brackets = {
      std::pair<double, double>{0.0, kPi / 3.0},
      {kPi / 3.0, kTCosNegQuarter},
      {kTCosNegQuarter, kPi},
  };
  for (const auto& [lo, hi] : brackets) {
    double root = bisect_cs(lo, hi, target_c);
    if (std::abs(cs_value(root).sin2tau - target_s) > 1e-6)
      root = two_pi - root; // mirror root carries the opposite S sign
    pts.push_back(make_point(root, r, CriticalKind::global_max));
  }

  if (std::abs(r - kTauSaddle) < eps)
    pts.push_back(make_point(kTCosQuarter, r, CriticalKind::saddle));
  return pts;
}

CriticalKind classify(double t, double tau) {
  const auto g = phi_gradient(t, tau);
  if (std::hypot(g[0], g[1]) >= 1e-6)
    throw std::invalid_argument("classify: (t, tau) is not a critical point");

  const double h = 1e-5;
  const double h11 =
      (phi(t + h, tau) - 2.0 * phi(t, tau) + phi(t - h, tau)) / (h * h);
  const double h22 =
      (phi(t, tau + h) - 2.0 * phi(t, tau) + phi(t, tau - h)) / (h * h);
  const double h12 = (phi(t + h, tau + h) - phi(t + h, tau - h) -
                      phi(t - h, tau + h) + phi(t - h, tau - h)) /
                     (4.0 * h * h);

  const double mean = 0.5 * (h11 + h22);
  const double disc = std::sqrt(0.25 * (h11 - h22) * (h11 - h22) + h12 * h12);
  const double lo = mean - disc, hi = mean + disc;

  if (std::min(std::abs(lo), std::abs(hi)) < 1e-7)
    return CriticalKind::degenerate;
  if (hi < 0.0) return CriticalKind::global_max; // all maxima of Phi are 9/25
  if (lo > 0.0)
    return phi(t, tau) < 1e-9 ? CriticalKind::global_min
                              : CriticalKind::local_min;
  return CriticalKind::saddle;
}

SymmetryReport verify_symmetries(double tau, double theta) {
  const cplx z3 = std::polar(1.0, 3.0 * theta);
  const cplx at_tau = evaluate(family_coefficients(tau), theta);
  SymmetryReport rep;
  rep.reflection_residual =
      std::abs(evaluate(family_coefficients(-tau), theta) -
               z3 * evaluate(family_coefficients(tau), -theta));
  rep.conjugation_residual =
      std::abs(evaluate(family_coefficients(tau + kPi), theta) -
               z3 * std::conj(at_tau));
  return rep;
}

namespace {

double orbit_distance(const std::vector<cplx>& c, const std::vector<cplx>& d) {
  // min over global phase psi and rotation alpha of ||c - e^{i psi} R_alpha d||.
  // For fixed alpha the optimal psi aligns the inner product, so scan alpha.
  double best = 1e100;
  const int steps = 720;
  for (int k = 0; k <= steps; ++k) {
    const double alpha = two_pi * double(k) / double(steps);
    cplx inner(0.0, 0.0);
    double nc = 0.0, nd = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const cplx dj = d[j] * std::polar(1.0, double(j) * alpha);
      inner += std::conj(dj) * c[j];
      nc += std::norm(c[j]);
      nd += std::norm(dj);
    }
    best = std::min(best, nc + nd - 2.0 * std::abs(inner));
  }
  return std::sqrt(std::max(0.0, best));
}

} // namespace

double family_distance(const TrigPolynomial& p) {
  if (!(p.support == FrequencySet({0, 1, 2, 3})))
    throw std::invalid_argument("family_distance: support must be {0,1,2,3}");
  double best = 1e100;
  for (int k = 0; k <= 180; ++k) {
    const double tau = kPi / 2.0 * double(k) / 180.0;
    const auto f = family_coefficients(tau).coefficients;
    std::vector<cplx> rev(f.rbegin(), f.rend());
    best = std::min({best, orbit_distance(p.coefficients, f),
                     orbit_distance(p.coefficients, rev)});
  }
  return best;
}

} // namespace sidonlab
