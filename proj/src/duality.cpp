#include "sidonlab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sidonlab/bounds.hpp"
#include "sidonlab/extremal_family.hpp"
#include "sidonlab/minimax.hpp"
#include "sidonlab/rng.hpp"
#include "sidonlab/simplex.hpp"

namespace sidonlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DualFunctional::DualFunctional(FrequencySet s, std::vector<cplx> v)
    : support(std::move(s)), values(std::move(v)) {
  if (support.size() != values.size())
    throw std::invalid_argument(
        "DualFunctional: value count must equal frequency count");
}

bool DualFunctional::is_unimodular(double tol) const {
  for (const auto& v : values)
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  return true;
}

bool DualFunctional::is_real_signed() const {
  for (const auto& v : values)
    if (v != cplx(1.0, 0.0) && v != cplx(-1.0, 0.0)) return false;
  return true;
}

double DiscreteMeasure::total_variation() const {
  double s = 0.0;
  for (const auto& w : weights) s += std::abs(w);
  return s;
}

cplx apply(const DualFunctional& l, const TrigPolynomial& p) {
  cplx acc(0.0, 0.0);
  const auto& lf = l.support.frequencies();
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto it = std::lower_bound(lf.begin(), lf.end(), p.support[j]);
    if (it == lf.end() || *it != p.support[j])
      throw std::invalid_argument(
          "apply: polynomial frequency missing from the functional support");
    acc += p.coefficients[j] * l.values[std::size_t(it - lf.begin())];
  }
  return acc;
}

DiscreteMeasure lift_to_roots(const DualFunctional& l, std::size_t N) {
  if (N == 0) throw std::invalid_argument("lift_to_roots: N >= 1");
  // Class values mod N; the formula only needs lambda mod N, so negative
  // frequencies fold in directly. Consistency is exact equality.
  std::vector<cplx> cls(N, cplx(0.0, 0.0));
  std::vector<std::ptrdiff_t> owner(N, -1);
  for (std::size_t j = 0; j < l.support.size(); ++j) {
    const std::size_t r =
        std::size_t(((l.support[j] % std::int64_t(N)) + std::int64_t(N)) %
                    std::int64_t(N));
    if (owner[r] >= 0) {
      if (l.values[j] != cls[r]) {
        std::ostringstream os;
        os << "lift_to_roots: values at frequencies " << l.support[owner[r]]
           << " and " << l.support[j] << " differ within class " << r
           << " mod " << N;
        throw std::invalid_argument(os.str());
      }
    } else {
      owner[r] = std::ptrdiff_t(j);
      cls[r] = l.values[j];
    }
  }

  DiscreteMeasure mu;
  mu.modulus_N = N;
  mu.weights.assign(N, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < N; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t r = 0; r < N; ++r)
      acc += cls[r] *
             std::polar(1.0, -two_pi * double((r * k) % N) / double(N));
    mu.weights[k] = acc / double(N);
  }
  return mu;
}

bool verify_representation(const DiscreteMeasure& mu, const DualFunctional& l,
                           double tol) {
  const std::size_t N = mu.modulus_N;
  for (std::size_t j = 0; j < l.support.size(); ++j) {
    const std::size_t r =
        std::size_t(((l.support[j] % std::int64_t(N)) + std::int64_t(N)) %
                    std::int64_t(N));
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < N; ++k)
      acc += mu.weights[k] *
             std::polar(1.0, two_pi * double((r * k) % N) / double(N));
    if (std::abs(acc - l.values[j]) > tol) return false;
  }
  return true;
}

std::vector<cplx> aligned_phases(const DiscreteMeasure& mu) {
  std::vector<cplx> u(mu.weights.size(), cplx(1.0, 0.0));
  for (std::size_t k = 0; k < mu.weights.size(); ++k) {
    const double m = std::abs(mu.weights[k]);
    if (m > 0.0) u[k] = std::conj(mu.weights[k]) / m;
  }
  return u;
}

namespace {

// ------- upper bounds -------

// Total variation of the trivial lifting after translating the support to
// min 0 and rotating so the endpoint classes agree. Valid whenever the two
// endpoint values have equal modulus; the rotation z -> e^{ia} z is an
// isometry of C_Lambda, so the result bounds ||l||.
std::optional<double> rotated_lift_upper(const DualFunctional& l) {
  const std::size_t n = l.support.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::abs(l.values[0]); // ||l|| is exactly |l(e_j)|

  const auto freqs = l.support.normalized();
  const std::int64_t N = freqs.max();
  const cplx v0 = l.values.front(), vN = l.values.back();
  if (std::abs(std::abs(v0) - std::abs(vN)) > 1e-12) return std::nullopt;

  double alpha = 0.0;
  if (std::abs(v0) > 0.0) alpha = std::arg(v0 / vN) / double(N);

  // Only the endpoint frequencies share a class mod N; build class values
  // from the rotated functional with the endpoint forced consistent.
  std::vector<cplx> cls(std::size_t(N), cplx(0.0, 0.0));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t r = std::size_t(freqs[j] % N);
    cls[r] = l.values[j] * std::polar(1.0, double(freqs[j]) * alpha);
  }
  double tv = 0.0;
  for (std::int64_t k = 0; k < N; ++k) {
    cplx acc(0.0, 0.0);
    for (std::int64_t r = 0; r < N; ++r)
      acc += cls[std::size_t(r)] *
             std::polar(1.0, -two_pi * double((r * k) % N) / double(N));
    tv += std::abs(acc) / double(N);
  }
  return tv;
}

// Minimal-cost representation of l by nonnegative masses along `polygon`
// phase directions at `grid` circle points: a finite linear program whose
// solution is a measure representing l exactly, so the total variation of
// its collected atoms bounds ||l|| from above.
struct MeasureProgram {
  double tv = 0.0;
  double objective = 0.0;
  std::size_t iterations = 0;
};

MeasureProgram measure_lp_upper(const DualFunctional& l,
                                const NormBracketConfig& cfg) {
  const std::size_t n = l.support.size();
  const std::size_t m = cfg.measure_grid;
  const std::size_t P = cfg.polygon;

  LpProblem lp;
  lp.rows = 2 * n;
  lp.cols = m * P;
  lp.a.assign(lp.rows * lp.cols, 0.0);
  lp.b.resize(lp.rows);
  lp.c.assign(lp.cols, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    lp.b[2 * j] = l.values[j].real();
    lp.b[2 * j + 1] = l.values[j].imag();
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double theta = two_pi * double(k) / double(m);
    for (std::size_t s = 0; s < P; ++s) {
      const double phi = two_pi * double(s) / double(P);
      const std::size_t col = k * P + s;
      for (std::size_t j = 0; j < n; ++j) {
        const double ang = double(l.support[j]) * theta + phi;
        lp.at(2 * j, col) = std::cos(ang);
        lp.at(2 * j + 1, col) = std::sin(ang);
      }
    }
  }

  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) {
    std::ostringstream os;
    os << "measure program did not converge (status "
       << int(r.status) << " after " << r.iterations << " iterations)";
    throw std::runtime_error(os.str());
  }

  // Collect the atom at each grid point and re-check the moments.
  std::vector<cplx> atoms(m, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t s = 0; s < P; ++s)
      atoms[k] += r.x[k * P + s] *
                  std::polar(1.0, two_pi * double(s) / double(P));
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k)
      acc += atoms[k] *
             std::polar(1.0, double(l.support[j]) * two_pi * double(k) /
                                 double(m));
    if (std::abs(acc - l.values[j]) > 1e-7)
      throw std::runtime_error(
          "measure program: solution fails the moment constraints");
  }

  MeasureProgram out;
  for (const auto& a : atoms) out.tv += std::abs(a);
  out.objective = r.objective;
  out.iterations = r.iterations;
  return out;
}

// ------- lower bound -------

double grid_sup(const TrigPolynomial& p, std::size_t g) {
  double best = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    const double v = std::abs(evaluate(p, two_pi * double(i) / double(g)));
    best = std::max(best, v);
  }
  return best;
}

struct LowerSearch {
  TrigPolynomial witness;
  double value = 0.0; // |l(p)| / certified sup norm
};

std::vector<std::vector<cplx>> candidate_coefficients(
    const DualFunctional& l, const NormBracketConfig& cfg) {
  const std::size_t n = l.support.size();
  std::vector<std::vector<cplx>> cands;

  for (std::size_t j = 0; j < n; ++j) { // single characters
    std::vector<cplx> c(n, cplx(0.0, 0.0));
    c[j] = 1.0;
    cands.push_back(std::move(c));
  }
  { // phase-aligned flat vector
    std::vector<cplx> c(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double m = std::abs(l.values[j]);
      c[j] = m > 0.0 ? std::conj(l.values[j]) / (m * double(n))
                     : cplx(1.0 / double(n), 0.0);
    }
    cands.push_back(std::move(c));
  }
  if (l.support.normalized() == FrequencySet({0, 1, 2, 3})) {
    // the extremal family and its isometric images
    for (int k = 0; k <= 12; ++k) {
      const auto f = family_coefficients(kPi / 2.0 * double(k) / 12.0);
      std::vector<cplx> base = f.coefficients;
      std::vector<cplx> rev(base.rbegin(), base.rend());
      for (const auto& src : {base, rev}) {
        std::vector<cplx> twist(src);
        for (std::size_t j = 1; j < twist.size(); j += 2) twist[j] = -twist[j];
        cands.push_back(src);
        cands.push_back(std::move(twist));
      }
    }
  }
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.random_starts; ++s) {
    std::vector<cplx> c(n);
    for (auto& x : c) x = rng.disc();
    cands.push_back(std::move(c));
  }
  return cands;
}

LowerSearch lower_bound_search(const DualFunctional& l,
                               const NormBracketConfig& cfg) {
  const std::size_t n = l.support.size();
  auto ratio = [&](const std::vector<cplx>& c) {
    TrigPolynomial p(l.support, c);
    const double den = grid_sup(p, cfg.search_grid);
    if (den <= 0.0) return -1.0;
    return std::abs(apply(l, p)) / den;
  };

  std::vector<cplx> best;
  double best_ratio = -1.0;
  for (auto& c : candidate_coefficients(l, cfg)) {
    const double r = ratio(c);
    if (r > best_ratio) {
      best_ratio = r;
      best = std::move(c);
    }
  }

  if (cfg.refine) {
    double step = 0.05;
    for (int sweep = 0; sweep < cfg.refine_sweeps && step > 1e-9; ++sweep) {
      bool improved = false;
      for (std::size_t j = 0; j < n; ++j) {
        for (int dim = 0; dim < 2; ++dim) {
          for (double sgn : {+1.0, -1.0}) {
            auto trial = best;
            if (dim == 0)
              trial[j] += sgn * step;
            else
              trial[j] += cplx(0.0, sgn * step);
            const double r = ratio(trial);
            if (r > best_ratio + 1e-15) {
              best_ratio = r;
              best = std::move(trial);
              improved = true;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  // scale to moduli sum 1 (the ratio is scale invariant) and certify
  TrigPolynomial p(l.support, best);
  const double msum = moduli_sum(p);
  if (msum > 0.0)
    for (auto& c : p.coefficients) c /= msum;
  LowerSearch out;
  const auto cert = sup_norm_auto(p, cfg.cert_rel_slack);
  out.value = std::abs(apply(l, p)) / cert.certified_upper;
  out.witness = std::move(p);
  return out;
}

} // namespace

NormComputation norm_bracket(const DualFunctional& l,
                             const NormBracketConfig& cfg) {
  if (l.support.empty())
    throw std::invalid_argument("norm_bracket: empty functional");

  NormComputation out;
  std::ostringstream notes;

  if (const auto lift = rotated_lift_upper(l)) out.lift_upper = *lift;
  if (cfg.use_lp && l.support.size() > 1) {
    try {
      out.lp_upper = measure_lp_upper(l, cfg).tv;
    } catch (const std::runtime_error& e) {
      notes << e.what() << "; ";
      if (!out.lift_upper) throw; // no other upper route: surface the failure
    }
  }

  double upper = 1e300;
  if (out.lift_upper) upper = std::min(upper, *out.lift_upper);
  if (out.lp_upper) upper = std::min(upper, *out.lp_upper);
  if (upper >= 1e300)
    throw std::runtime_error(
        "norm_bracket: no upper bound route available for this functional");

  auto low = lower_bound_search(l, cfg);
  out.bracket.lower = low.value;
  out.bracket.upper = upper;
  out.witness = std::move(low.witness);
  out.notes = notes.str();
  return out;
}

namespace {

// Canonical representatives of {-1,+1}^n under l -> -l and the half-turn
// twist l(e_j) -> (-1)^{lambda_j} l(e_j).
std::vector<std::vector<double>> sign_pattern_orbits(const FrequencySet& fs) {
  const std::size_t n = fs.size();
  std::set<std::vector<double>> reps;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j)
      s[j] = (bits >> j) & 1 ? -1.0 : 1.0;
    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j)
      t[j] = (fs[j] % 2) == 0 ? s[j] : -s[j];
    std::vector<double> canon = s;
    for (auto cand : {s, t}) {
      canon = std::min(canon, cand);
      for (auto& x : cand) x = -x;
      canon = std::min(canon, cand);
    }
    reps.insert(canon);
  }
  return {reps.begin(), reps.end()};
}

DualFunctional pattern_functional(const FrequencySet& fs,
                                  const std::vector<double>& s) {
  std::vector<cplx> v(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) v[j] = cplx(s[j], 0.0);
  return DualFunctional(fs, std::move(v));
}

} // namespace

NormComputation real_unconditional_constant(const FrequencySet& fs) {
  if (fs.empty())
    throw std::invalid_argument("real_unconditional_constant: empty set");
  if (fs.size() > 16)
    throw std::invalid_argument(
        "real_unconditional_constant: sign enumeration limited to 16");

  const FrequencySet norm = fs.normalized();

  if (norm == FrequencySet({0, 1, 2, 3})) {
    // The U_3 route: with l(e_0) = l(e_3) = 1 the liftings are the Dirac
    // measure (pattern + + +) or one of three measures of total variation
    // 5/3, so the constant is at most 5/3. Each aligned image of the
    // tau = pi/2 family polynomial has |l(p)| = 1 at sup norm exactly 3/5,
    // which gives the matching lower bound.
    NormComputation out;
    out.notes = "exact U_3 lifting path";

    double upper = 0.0;
    const std::array<std::array<double, 4>, 4> patterns = {{
        {1.0, 1.0, 1.0, 1.0},
        {1.0, 1.0, -1.0, 1.0},
        {1.0, -1.0, 1.0, 1.0},
        {1.0, -1.0, -1.0, 1.0},
    }};
    for (const auto& pat : patterns) {
      const DualFunctional l = pattern_functional(
          norm, std::vector<double>(pat.begin(), pat.end()));
      upper = std::max(upper, lift_to_roots(l, 3).total_variation());
    }

    const auto fam = family_coefficients(kPi / 2.0);
    std::vector<std::vector<cplx>> images;
    images.push_back(fam.coefficients);
    images.emplace_back(fam.coefficients.rbegin(), fam.coefficients.rend());
    for (int i = 0; i < 2; ++i) {
      auto twist = images[std::size_t(i)];
      for (std::size_t j = 1; j < twist.size(); j += 2) twist[j] = -twist[j];
      images.push_back(std::move(twist));
    }
    double lower = 0.0;
    for (const auto& pat : patterns) {
      const DualFunctional l = pattern_functional(
          norm, std::vector<double>(pat.begin(), pat.end()));
      for (const auto& img : images) {
        const TrigPolynomial p(norm, img);
        const double v = std::abs(apply(l, p)) / 0.6; // sup norm is 3/5
        if (v > lower) {
          lower = v;
          out.witness = p;
        }
      }
    }
    out.bracket = NormBracket{lower, upper};
    return out;
  }

  NormComputation out;
  out.bracket = NormBracket{0.0, 0.0};
  for (const auto& s : sign_pattern_orbits(fs)) {
    auto nb = norm_bracket(pattern_functional(fs, s));
    if (nb.bracket.lower > out.bracket.lower) {
      out.bracket.lower = nb.bracket.lower;
      out.witness = std::move(nb.witness);
    }
    out.bracket.upper = std::max(out.bracket.upper, nb.bracket.upper);
  }
  out.notes = "sign-pattern enumeration";
  return out;
}

NormComputation sidon_constant_bracket(const FrequencySet& fs,
                                       const SidonBracketConfig& cfg) {
  if (fs.empty())
    throw std::invalid_argument("sidon_constant_bracket: empty set");
  if (fs.size() > 6)
    throw std::invalid_argument("sidon_constant_bracket: |Lambda| <= 6");

  NormComputation out;
  if (fs.size() == 1) {
    // a single character: S = 1 exactly
    out.bracket = NormBracket{1.0, 1.0};
    out.witness = TrigPolynomial(fs, {cplx(1.0, 0.0)});
    out.notes = "single character";
    return out;
  }

  out.bracket.upper = newman_queffelec_bound(fs);

  // Sign patterns get the full bracket machinery; random unimodular
  // functionals get the cheap lower path only. Any ||l|| lower-bounds the
  // supremum defining S.
  double lower = 0.0;
  for (const auto& s : sign_pattern_orbits(fs)) {
    auto nb = norm_bracket(pattern_functional(fs, s), cfg.inner);
    if (nb.bracket.lower > lower) {
      lower = nb.bracket.lower;
      out.witness = std::move(nb.witness);
    }
  }
  NormBracketConfig cheap = cfg.inner;
  cheap.use_lp = false;
  cheap.refine = false;
  cheap.cert_rel_slack = 1e-4;
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.random_phase_samples; ++i) {
    std::vector<cplx> v(fs.size());
    v[0] = 1.0; // global phase quotient
    for (std::size_t j = 1; j < v.size(); ++j) v[j] = rng.unit();
    auto nb = norm_bracket(DualFunctional(fs, std::move(v)), cheap);
    if (nb.bracket.lower > lower) {
      lower = nb.bracket.lower;
      out.witness = std::move(nb.witness);
    }
  }
  if (cfg.use_minimax) {
    const auto mm = minimax_optimize(fs);
    if (1.0 / mm.value > lower) {
      lower = 1.0 / mm.value;
      out.witness = mm.witness;
    }
  }
  out.bracket.lower = lower;
  return out;
}

} // namespace sidonlab
