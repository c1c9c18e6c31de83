#include "sidonlab/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sidonlab/biunimodular.hpp"
#include "sidonlab/bounds.hpp"
#include "sidonlab/duality.hpp"
#include "sidonlab/extremal_family.hpp"
#include "sidonlab/minimax.hpp"
#include "sidonlab/rng.hpp"
#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

CriterionResult family_normalization() {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double tau = kPi / 2.0 * double(i) / 999.0;
    worst = std::max(worst,
                     std::abs(moduli_sum(family_coefficients(tau)) - 1.0));
  }
  return {1, "family moduli sum is 1 over 1000 tau", worst < 1e-12,
          fmt("max |sum-1| = %.3e (tol 1e-12)", worst)};
}

CriterionResult family_sup_norm() {
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double tau = kPi / 2.0 * double(i) / 20.0;
    const auto cert = sup_norm(family_coefficients(tau), std::size_t(1) << 23);
    lo = std::min(lo, cert.certified_upper);
    hi = std::max(hi, cert.certified_upper);
  }
  const bool ok = lo >= 0.6 - 1e-6 && hi <= 0.6 + 1e-6;
  return {2, "family certified sup norm is 3/5 over 21 tau", ok,
          fmt("certified range [%.12f, %.12f] (tol 3/5 +- 1e-6)", lo, hi)};
}

CriterionResult phi_closed_form() {
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double t = two_pi * double(i) / 400.0;
    for (int j = 0; j < 400; ++j) {
      const double tau = kPi / 2.0 * double(j) / 399.0;
      const double direct = std::norm(evaluate(family_coefficients(tau), t));
      worst = std::max(worst, std::abs(phi(t, tau) - direct));
    }
  }
  return {3, "closed-form Phi matches |f|^2 on a 400x400 grid", worst < 1e-12,
          fmt("max |Phi - |f|^2| = %.3e (tol 1e-12)", worst)};
}

CriterionResult symmetry_identities() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = two_pi * double(i) / 100.0;
    for (int j = 0; j < 100; ++j) {
      const double theta = two_pi * double(j) / 100.0;
      const auto rep = verify_symmetries(tau, theta);
      worst = std::max({worst, rep.reflection_residual,
                        rep.conjugation_residual});
    }
  }
  return {4, "both family symmetries hold on a 100x100 grid", worst < 1e-12,
          fmt("max residual = %.3e (tol 1e-12)", worst)};
}

CriterionResult det_m_identity() {
  double worst_zero = 0.0;
  for (double t : {kPi, std::acos(0.25), 0.0})
    worst_zero = std::max(worst_zero, std::abs(det_M(t)));
  double worst_match = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = two_pi * (double(i) + 0.5) / 1000.0;
    worst_match = std::max(worst_match,
                           std::abs(det_M(t) - matrix_M(t).det()));
  }
  const bool ok = worst_zero < 1e-12 && worst_match < 1e-12;
  return {5, "det M vanishes at the special cosines and matches the matrix",
          ok,
          fmt("max |det| at roots = %.3e, max closed-vs-matrix = %.3e "
              "(tol 1e-12)",
              worst_zero, worst_match)};
}

CriterionResult cs_consistency() {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = kPi * (double(i) + 0.5) / 1000.0;
    const auto ps = cs_rhs(t);
    worst = std::max(worst, std::abs(ps.cos2tau * ps.cos2tau +
                                     ps.sin2tau * ps.sin2tau - 1.0));
  }
  double worst_endpoint = 0.0;
  const std::array<std::pair<double, double>, 4> table = {{
      {0.0, 1.0},
      {kPi / 3.0, -1.0},
      {std::acos(-0.25), 1.0},
      {kPi, -1.0},
  }};
  for (const auto& [t, expect] : table)
    worst_endpoint =
        std::max(worst_endpoint, std::abs(cs_limit(t).cos2tau - expect));
  const bool ok = worst < 1e-10 && worst_endpoint < 1e-10;
  return {6, "system (CS) is consistent and hits the tabulated C values", ok,
          fmt("max |C^2+S^2-1| = %.3e, max endpoint error = %.3e (tol 1e-10)",
              worst, worst_endpoint)};
}

CriterionResult critical_landscape() {
  std::ostringstream fail;
  double worst_value = 0.0, worst_grad = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double tau = kPi / 2.0 * double(k) / 51.0;
    const auto pts = critical_points(tau);
    if (pts.size() != 3) {
      fail << "tau=" << tau << " gave " << pts.size() << " points; ";
      continue;
    }
    for (const auto& cp : pts) {
      worst_value = std::max(worst_value, std::abs(cp.value - 0.36));
      const auto g = phi_gradient(cp.t, cp.tau);
      worst_grad = std::max(worst_grad, std::hypot(g[0], g[1]));
    }
  }
  bool ok = fail.str().empty() && worst_value < 1e-9 && worst_grad < 1e-8;

  const double min_val = phi(kPi, 0.0);
  const double lmin_err = std::abs(phi(0.0, kPi / 2.0) - 49.0 / 225.0);
  const double tau_s = 0.5 * std::acos(17.0 / 37.0);
  const double t_s = std::acos(0.25);
  const double saddle_err = std::abs(phi(t_s, tau_s) - 5.0 / 18.0);
  const bool saddle_ok = classify(t_s, tau_s) == CriticalKind::saddle;
  ok = ok && std::abs(min_val) < 1e-12 && lmin_err < 1e-12 &&
       saddle_err < 1e-9 && saddle_ok;

  return {7, "critical landscape: 3 maxima per tau, minima and saddle", ok,
          fmt("max |Phi-9/25| = %.3e, max grad = %.3e, saddle err = %.3e",
              worst_value, worst_grad, saddle_err) +
              (fail.str().empty() ? "" : "; " + fail.str())};
}

CriterionResult unconditional_constant() {
  const auto uc = real_unconditional_constant(FrequencySet({0, 1, 2, 3}));
  const double five_thirds = 5.0 / 3.0;
  bool ok = uc.bracket.lower >= five_thirds - 1e-9 &&
            uc.bracket.upper <= five_thirds + 1e-9;

  double worst_tv = 0.0;
  const std::array<std::array<double, 3>, 3> classes = {{
      {1.0, -1.0, -1.0},
      {1.0, -1.0, 1.0},
      {1.0, 1.0, -1.0},
  }};
  for (const auto& cv : classes) {
    const DualFunctional l(FrequencySet({0, 1, 2, 3}),
                           {cplx(cv[0], 0.0), cplx(cv[1], 0.0),
                            cplx(cv[2], 0.0), cplx(cv[0], 0.0)});
    worst_tv = std::max(worst_tv, std::abs(lift_to_roots(l, 3)
                                               .total_variation() -
                                           five_thirds));
  }
  ok = ok && worst_tv < 1e-12;
  return {8, "real unconditional constant of {0,1,2,3} is 5/3", ok,
          fmt("bracket [%.12f, %.12f], max lifting TV error = %.3e",
              uc.bracket.lower, uc.bracket.upper, worst_tv)};
}

CriterionResult sidon_brackets(std::uint64_t seed) {
  SidonBracketConfig cfg;
  cfg.seed = seed;
  cfg.inner.seed = seed;
  const auto sb = sidon_constant_bracket(FrequencySet({0, 1, 2, 3}), cfg);
  bool ok = sb.bracket.lower >= 5.0 / 3.0 - 1e-3 &&
            sb.bracket.upper == std::sqrt(3.0);

  MinimaxConfig mc;
  mc.seed = seed;
  const double v012 = minimax_optimize(FrequencySet({0, 1, 2}), mc).value;
  const double v01234 =
      minimax_optimize(FrequencySet({0, 1, 2, 3, 4}), mc).value;
  const double v01 = minimax_optimize(FrequencySet({0, 1}), mc).value;
  ok = ok && std::abs(v012 - 1.0 / std::sqrt(2.0)) < 1e-3 &&
       std::abs(v01234 - 0.5) < 1e-3 && std::abs(v01 - 1.0) < 1e-6;
  return {9, "Sidon bracket of {0,1,2,3} and the N in {1,2,4} minimaxes", ok,
          fmt("bracket [%.9f, %.9f]; ", sb.bracket.lower, sb.bracket.upper) +
              fmt("minimax {0,1,2} = %.9f, {0,..,4} = %.9f, {0,1} = %.9f",
                  v012, v01234, v01)};
}

CriterionResult minimax_flagship(std::uint64_t seed) {
  MinimaxConfig mc;
  mc.seed = seed;
  const auto mm = minimax_optimize(FrequencySet({0, 1, 2, 3}), mc);
  const double floor = 1.0 / std::sqrt(3.0);
  const bool ok = mm.value <= 0.6 + 1e-4 && mm.value >= floor - 1e-8;
  return {10, "minimax of {0,1,2,3} is within [1/sqrt(3), 3/5 + 1e-4]", ok,
          fmt("value = %.9f (floor %.9f, target 0.6)", mm.value, floor)};
}

CriterionResult parseval_identity(std::uint64_t seed) {
  Rng rng(seed ^ 0x5bf0f5259c6b8e1dULL);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    // random support inside {0,...,8} containing 0, random coefficients
    std::vector<std::int64_t> freqs = {0};
    for (std::int64_t f = 1; f <= 8; ++f)
      if (rng.uniform() < 0.55) freqs.push_back(f);
    if (freqs.size() < 2) freqs.push_back(1 + std::int64_t(rng.next() % 8));
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
    std::vector<cplx> coeffs(freqs.size());
    for (auto& c : coeffs) c = rng.disc();
    const TrigPolynomial p(FrequencySet(freqs), coeffs);
    const std::size_t N = std::size_t(p.support.max());
    const double theta = rng.angle();

    const double avg = roots_of_unity_average(p, N, theta);
    // independent residue-class evaluation
    double res = 0.0;
    std::vector<bool> used(freqs.size(), false);
    for (std::size_t j = 0; j < freqs.size(); ++j) {
      if (used[j]) continue;
      cplx sum(0.0, 0.0);
      for (std::size_t k = j; k < freqs.size(); ++k) {
        if ((freqs[k] - freqs[j]) % std::int64_t(N) == 0) {
          sum += coeffs[k] * std::polar(1.0, double(freqs[k]) * theta);
          used[k] = true;
        }
      }
      res += std::norm(sum);
    }
    worst = std::max(worst, std::abs(avg - res));
  }
  return {11, "roots-of-unity average equals the residue decomposition",
          worst < 1e-12, fmt("max |avg - residue| = %.3e (tol 1e-12)", worst)};
}

CriterionResult biunimodular_suite(std::uint64_t seed) {
  double worst_res = 0.0;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto u = gauss_sequence(n); // throws if not biunimodular at 1e-10
    ok = ok && is_biunimodular(u, 1e-10);
    worst_res = std::max(worst_res, circulant_hadamard_residual(u));

    std::vector<cplx> ext(u.entries);
    ext.push_back(u.entries.front());
    ok = ok && ytt_equality_check(ext, n);
  }
  ok = ok && worst_res < 1e-10;

  Rng rng(seed ^ 0x7c3dd9a1b2f0e64bULL);
  int agree = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + std::size_t(rng.next() % 8);
    BiunimodularCandidate u;
    u.entries.resize(n);
    for (auto& e : u.entries) e = rng.unit();
    std::vector<cplx> ext(u.entries);
    ext.push_back(u.entries.front());
    const bool a = ytt_equality_check(ext, n);
    const bool b = is_biunimodular(u, 1e-9);
    if (a == b) ++agree;
  }
  ok = ok && agree == 100;
  return {12, "Gauss sequences are biunimodular; (ytt) equality matches", ok,
          fmt("max Hadamard residual = %.3e, random agreement %.0f/100",
              worst_res, double(agree))};
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(family_normalization());
  out.push_back(family_sup_norm());
  out.push_back(phi_closed_form());
  out.push_back(symmetry_identities());
  out.push_back(det_m_identity());
  out.push_back(cs_consistency());
  out.push_back(critical_landscape());
  out.push_back(unconditional_constant());
  out.push_back(sidon_brackets(seed));
  out.push_back(minimax_flagship(seed));
  out.push_back(parseval_identity(seed));
  out.push_back(biunimodular_suite(seed));
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

} // namespace sidonlab
