#include "sidonlab/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sidonlab/extremal_family.hpp"
#include "sidonlab/rng.hpp"

namespace sidonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Params {
  std::vector<double> moduli; // nonnegative, sum 1
  std::vector<double> phases;
};

void normalize_moduli(Params& x) {
  double s = 0.0;
  for (auto& m : x.moduli) {
    m = std::abs(m);
    s += m;
  }
  if (s <= 0.0) {
    x.moduli.assign(x.moduli.size(), 1.0 / double(x.moduli.size()));
    return;
  }
  for (auto& m : x.moduli) m /= s;
}

std::vector<cplx> to_coeffs(const Params& x) {
  std::vector<cplx> c(x.moduli.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = std::polar(x.moduli[j], x.phases[j]);
  return c;
}

// max_i |f(theta_i)| over g equispaced angles, with the argmax index.
double grid_objective(const FrequencySet& fs, const std::vector<cplx>& c,
                      std::size_t g, std::size_t& argmax) {
  const std::size_t n = c.size();
  const double h = two_pi / double(g);
  std::vector<cplx> cur(n), step(n);
  for (std::size_t j = 0; j < n; ++j) {
    cur[j] = c[j];
    step[j] = std::polar(1.0, double(fs[j]) * h);
  }
  double best = -1.0;
  argmax = 0;
  for (std::size_t i = 0; i < g; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += cur[j];
    const double v = std::norm(acc);
    if (v > best) {
      best = v;
      argmax = i;
    }
    for (std::size_t j = 0; j < n; ++j) cur[j] *= step[j];
  }
  return std::sqrt(best);
}

// Sup-norm estimate for the polish phase: grid max plus a golden-section
// touch-up around the argmax cell.
double sup_estimate(const FrequencySet& fs, const std::vector<cplx>& c,
                    std::size_t g) {
  std::size_t idx = 0;
  double best = grid_objective(fs, c, g, idx);
  const double h = two_pi / double(g);
  auto val = [&](double th) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j)
      acc += c[j] * std::polar(1.0, double(fs[j]) * th);
    return std::abs(acc);
  };
  double a = (double(idx) - 1.0) * h, b = (double(idx) + 1.0) * h;
  const double gr = 0.61803398874989485;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = val(x1), f2 = val(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = val(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = val(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

Params initial_point(const FrequencySet& fs, int start, Rng& rng) {
  const std::size_t n = fs.size();
  const double N = std::max<double>(1.0, double(fs.max_abs()));
  Params x;
  x.moduli.assign(n, 1.0 / double(n));
  x.phases.assign(n, 0.0);
  switch (start) {
    case 0: // quadratic phases: the flat-spectrum heuristic
      for (std::size_t j = 0; j < n; ++j)
        x.phases[j] = kPi * double(fs[j]) * double(fs[j]) / N;
      return x;
    case 1:
      for (std::size_t j = 0; j < n; ++j)
        x.phases[j] = two_pi * double(fs[j]) * double(fs[j]) / (N + 1.0);
      return x;
    case 2:
      if (fs == FrequencySet({0, 1, 2, 3})) {
        const auto fam = family_coefficients(kPi / 4.0).coefficients;
        for (std::size_t j = 0; j < n; ++j) {
          x.moduli[j] = std::abs(fam[j]);
          x.phases[j] = std::arg(fam[j]);
        }
        return x;
      }
      break;
    default:
      break;
  }
  for (std::size_t j = 0; j < n; ++j) {
    x.moduli[j] = 0.2 + rng.uniform();
    x.phases[j] = rng.angle();
  }
  normalize_moduli(x);
  return x;
}

Params subgradient_descent(const FrequencySet& fs, Params x,
                           const MinimaxConfig& cfg, double& best_val) {
  const std::size_t n = fs.size();
  Params best = x;
  std::size_t argmax = 0;
  best_val = grid_objective(fs, to_coeffs(x), cfg.grid, argmax);
  double step = 0.1;
  int stall = 0;

  for (int it = 0; it < cfg.iters && step > 1e-13; ++it) {
    const auto c = to_coeffs(x);
    const double val = grid_objective(fs, c, cfg.grid, argmax);
    if (val < best_val - 1e-15) {
      best_val = val;
      best = x;
      stall = 0;
    } else if (++stall >= 25) {
      step *= 0.5;
      stall = 0;
      x = best; // restart the probe from the incumbent
    }

    const double theta = two_pi * double(argmax) / double(cfg.grid);
    cplx f(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      f += c[j] * std::polar(1.0, double(fs[j]) * theta);
    const double fa = std::abs(f);
    if (fa < 1e-15) break; // objective is 0; cannot improve
    const cplx u = std::conj(f / fa);

    for (std::size_t j = 0; j < n; ++j) {
      const cplx e = std::polar(1.0, x.phases[j] + double(fs[j]) * theta);
      const double gm = (u * e).real();
      const double gp = -x.moduli[j] * (u * e).imag();
      x.moduli[j] -= step * gm;
      x.phases[j] -= step * gp;
    }
    normalize_moduli(x);
  }
  return best;
}

void compass_polish(const FrequencySet& fs, Params& x, std::size_t grid) {
  auto objective = [&](const Params& p) {
    return sup_estimate(fs, to_coeffs(p), grid);
  };
  double cur = objective(x);
  double step = 2e-3;
  for (int sweep = 0; sweep < 2500 && step > 1e-10; ++sweep) {
    bool improved = false;
    for (std::size_t j = 0; j < x.moduli.size(); ++j) {
      for (int dim = 0; dim < 2; ++dim) {
        for (double sgn : {+1.0, -1.0}) {
          Params trial = x;
          if (dim == 0) {
            trial.moduli[j] = std::max(0.0, trial.moduli[j] + sgn * step);
            normalize_moduli(trial);
          } else {
            trial.phases[j] += sgn * step;
          }
          const double v = objective(trial);
          if (v < cur - 1e-15) {
            cur = v;
            x = trial;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
}

bool lexicographic_less(const std::vector<cplx>& a,
                        const std::vector<cplx>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
    if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
  }
  return false;
}

} // namespace

MinimaxResult minimax_optimize(const FrequencySet& fs,
                               const MinimaxConfig& cfg) {
  if (fs.empty()) throw std::invalid_argument("minimax_optimize: empty set");
  if (cfg.starts < 1 || cfg.grid < 8)
    throw std::invalid_argument("minimax_optimize: bad config");

  MinimaxResult res;
  res.per_start_values.reserve(std::size_t(cfg.starts));
  Params best;
  double best_val = 1e300;

  for (int s = 0; s < cfg.starts; ++s) {
    Rng rng(cfg.seed + 0x632be59bd9b4e019ULL * std::uint64_t(s + 1));
    Params x = initial_point(fs, s, rng);
    double val = 0.0;
    x = subgradient_descent(fs, x, cfg, val);
    res.per_start_values.push_back(val);
    if (val < best_val ||
        (val == best_val &&
         lexicographic_less(to_coeffs(x), to_coeffs(best)))) {
      best_val = val;
      best = x;
      res.best_start = s;
    }
  }

  compass_polish(fs, best, std::max<std::size_t>(cfg.grid * 8, 1 << 14));

  auto coeffs = to_coeffs(best);
  double msum = 0.0;
  for (const auto& c : coeffs) msum += std::abs(c);
  for (auto& c : coeffs) c /= msum;
  res.witness = TrigPolynomial(fs, std::move(coeffs));
  res.value = sup_norm_auto(res.witness, cfg.cert_rel_slack).certified_upper;
  return res;
}

double sidon_estimate(const FrequencySet& fs, const MinimaxConfig& cfg) {
  return 1.0 / minimax_optimize(fs, cfg).value;
}

} // namespace sidonlab
