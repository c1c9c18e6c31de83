#include "sidonlab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sidonlab/acceptance.hpp"
#include "sidonlab/biunimodular.hpp"
#include "sidonlab/bounds.hpp"
#include "sidonlab/duality.hpp"
#include "sidonlab/extremal_family.hpp"
#include "sidonlab/minimax.hpp"
#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pair_json(const cplx& z) {
  return "[" + num(z.real()) + "," + num(z.imag()) + "]";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

std::string poly_json(const TrigPolynomial& p) { return to_json(p); }

FrequencySet parse_set(const std::string& text) {
  std::vector<std::int64_t> freqs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    freqs.push_back(std::stoll(tok));
  }
  std::sort(freqs.begin(), freqs.end());
  return FrequencySet(std::move(freqs));
}

// complex token: "re" or "re:im"
std::vector<cplx> parse_values(const std::string& text) {
  std::vector<cplx> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      vals.emplace_back(std::stod(tok), 0.0);
    } else {
      vals.emplace_back(std::stod(tok.substr(0, colon)),
                        std::stod(tok.substr(colon + 1)));
    }
  }
  return vals;
}

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("SIDONLAB_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("SIDONLAB_SEED is not an integer");
    }
  }
  return fallback;
}

std::string bracket_json(const NormComputation& nc) {
  std::ostringstream os;
  os << "\"lower\":" << num(nc.bracket.lower)
     << ",\"upper\":" << num(nc.bracket.upper)
     << ",\"witness_polynomial\":" << poly_json(nc.witness);
  if (nc.lift_upper) os << ",\"lift_upper\":" << num(*nc.lift_upper);
  if (nc.lp_upper) os << ",\"lp_upper\":" << num(*nc.lp_upper);
  if (!nc.notes.empty()) os << ",\"notes\":\"" << escape(nc.notes) << "\"";
  return os.str();
}

std::string set_json(const FrequencySet& fs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < fs.size(); ++j) os << (j ? "," : "") << fs[j];
  os << "]";
  return os.str();
}

std::string point_json(const CriticalPoint& cp) {
  std::ostringstream os;
  os << "{\"t\":" << num(cp.t) << ",\"tau\":" << num(cp.tau)
     << ",\"phi\":" << num(cp.value) << ",\"kind\":\"" << to_string(cp.kind)
     << "\"}";
  return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"sidonlab: extremal trigonometric polynomials on {0,1,2,3}, "
               "Sidon-constant brackets and biunimodular sequences"};
  app.require_subcommand(1);

  std::string set_text = "0,1,2,3";
  std::string values_text;
  double tau = 0.0;
  int scan = 0, nt = 0, ntau = 0;
  std::uint64_t N = 3, n_biuni = 4;
  MinimaxConfig mc;
  bool seed_given = false;

  auto* bound = app.add_subcommand("bound", "sqrt(n-1) bound and the "
                                            "averaging chain report");
  bound->add_option("--set", set_text, "comma-separated frequencies");

  auto* minimax = app.add_subcommand("minimax", "minimize the sup norm at "
                                                "moduli sum 1");
  minimax->add_option("--set", set_text);
  minimax->add_option("--starts", mc.starts);
  minimax->add_option("--grid", mc.grid);
  minimax->add_option("--iters", mc.iters);
  auto* seed_opt = minimax->add_option("--seed", mc.seed);

  auto* sidon = app.add_subcommand("sidon", "bracket for the Sidon constant");
  sidon->add_option("--set", set_text);
  auto* sidon_seed = sidon->add_option("--seed", mc.seed);

  auto* uncond = app.add_subcommand("unconditional",
                                    "real unconditional constant bracket");
  uncond->add_option("--set", set_text);

  auto* lift = app.add_subcommand("lift", "trivial lifting of a residue-"
                                          "consistent functional to U_N");
  lift->add_option("--values", values_text, "values, e.g. 1,-1,-1 or re:im")
      ->required();
  lift->add_option("--N", N, "modulus")->required();
  lift->add_option("--set", set_text, "frequencies (default 0..len-1)");

  auto* family = app.add_subcommand("family", "family member and its "
                                              "critical points");
  family->add_option("--tau", tau);
  family->add_option("--scan", scan, "emit CSV for this many tau values");

  auto* phigrid = app.add_subcommand("phi-grid", "CSV grid of Phi(t,tau)");
  phigrid->add_option("--nt", nt)->required();
  phigrid->add_option("--ntau", ntau)->required();

  auto* critical = app.add_subcommand("critical-points",
                                      "critical points of Phi(., tau)");
  critical->add_option("--tau", tau)->required();

  auto* biuni = app.add_subcommand("biuni", "Gauss sequence and its "
                                            "Hadamard residual");
  biuni->add_option("--n", n_biuni)->required();

  auto* verify = app.add_subcommand("verify-all", "run the verification "
                                                  "suite");
  auto* verify_seed = verify->add_option("--seed", mc.seed);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  seed_given = seed_opt->count() > 0 || sidon_seed->count() > 0 ||
               verify_seed->count() > 0;

  try {
    const std::uint64_t seed = seed_given ? mc.seed : env_seed(mc.seed);
    mc.seed = seed;

    if (bound->parsed()) {
      const FrequencySet fs = parse_set(set_text);
      const double b = newman_queffelec_bound(fs);
      // chain instance on the flat unit-moduli-sum polynomial
      std::vector<cplx> flat(fs.size(), cplx(1.0 / double(fs.size()), 0.0));
      const auto rep = chain_check(TrigPolynomial(fs, flat));
      out << "{\"set\":" << set_json(fs) << ",\"bound\":" << num(b)
          << ",\"chain_report\":{\"sup_sq\":" << num(rep.sup_sq)
          << ",\"avg_sq\":" << num(rep.avg_sq)
          << ",\"decomposed\":" << num(rep.decomposed)
          << ",\"l1_sq_over\":" << num(rep.l1_sq_over)
          << ",\"theta_star\":" << num(rep.theta_star) << "}}\n";
      return 0;
    }

    if (minimax->parsed()) {
      const FrequencySet fs = parse_set(set_text);
      const auto res = minimax_optimize(fs, mc);
      out << "{\"set\":" << set_json(fs) << ",\"value\":" << num(res.value)
          << ",\"sidon_lower\":" << num(1.0 / res.value)
          << ",\"witness_polynomial\":" << poly_json(res.witness)
          << ",\"best_start\":" << res.best_start << ",\"per_start_values\":[";
      for (std::size_t i = 0; i < res.per_start_values.size(); ++i)
        out << (i ? "," : "") << num(res.per_start_values[i]);
      out << "]}\n";
      return 0;
    }

    if (sidon->parsed()) {
      const FrequencySet fs = parse_set(set_text);
      SidonBracketConfig cfg;
      cfg.seed = seed;
      cfg.inner.seed = seed;
      const auto sb = sidon_constant_bracket(fs, cfg);
      out << "{\"set\":" << set_json(fs) << "," << bracket_json(sb) << "}\n";
      return 0;
    }

    if (uncond->parsed()) {
      const FrequencySet fs = parse_set(set_text);
      const auto uc = real_unconditional_constant(fs);
      out << "{\"set\":" << set_json(fs) << "," << bracket_json(uc) << "}\n";
      return 0;
    }

    if (lift->parsed()) {
      const auto values = parse_values(values_text);
      FrequencySet fs;
      if (lift->count("--set")) {
        fs = parse_set(set_text);
      } else {
        std::vector<std::int64_t> iota(values.size());
        for (std::size_t j = 0; j < values.size(); ++j)
          iota[j] = std::int64_t(j);
        fs = FrequencySet(std::move(iota));
      }
      const DualFunctional l(fs, values);
      const auto mu = lift_to_roots(l, std::size_t(N));
      const auto phases = aligned_phases(mu);
      out << "{\"N\":" << mu.modulus_N << ",\"weights\":[";
      for (std::size_t k = 0; k < mu.weights.size(); ++k)
        out << (k ? "," : "") << pair_json(mu.weights[k]);
      out << "],\"total_variation\":" << num(mu.total_variation())
          << ",\"aligned_phases\":[";
      for (std::size_t k = 0; k < phases.size(); ++k)
        out << (k ? "," : "") << pair_json(phases[k]);
      out << "],\"represents\":"
          << (verify_representation(mu, l) ? "true" : "false") << "}\n";
      return 0;
    }

    if (family->parsed()) {
      if (scan > 0) {
        out << "tau,t,phi,kind\n";
        for (int i = 0; i < scan; ++i) {
          const double tv =
              scan == 1 ? 0.0 : kPi / 2.0 * double(i) / double(scan - 1);
          for (const auto& cp : critical_points(tv))
            out << num(tv) << "," << num(cp.t) << "," << num(cp.value) << ","
                << to_string(cp.kind) << "\n";
        }
        return 0;
      }
      const auto p = family_coefficients(tau);
      const auto cert = sup_norm(p, std::size_t(1) << 20);
      const double taur = FamilyParameter{tau}.reduced().tau;
      out << "{\"tau\":" << num(tau) << ",\"tau_reduced\":" << num(taur)
          << ",\"polynomial\":" << poly_json(p)
          << ",\"moduli_sum\":" << num(moduli_sum(p))
          << ",\"sup_norm\":{\"grid_max\":" << num(cert.grid_max)
          << ",\"certified_upper\":" << num(cert.certified_upper)
          << ",\"argmax_angle\":" << num(cert.argmax_angle)
          << ",\"grid_size\":" << cert.grid_size << "},\"critical_points\":[";
      const auto pts = critical_points(tau);
      for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i ? "," : "") << point_json(pts[i]);
      out << "]}\n";
      return 0;
    }

    if (phigrid->parsed()) {
      if (nt < 1 || ntau < 1)
        throw std::invalid_argument("phi-grid: nt and ntau must be >= 1");
      out << "t,tau,phi\n";
      for (int i = 0; i < nt; ++i) {
        const double t = two_pi * double(i) / double(nt);
        for (int j = 0; j < ntau; ++j) {
          const double tv =
              ntau == 1 ? 0.0 : kPi / 2.0 * double(j) / double(ntau - 1);
          out << num(t) << "," << num(tv) << "," << num(phi(t, tv)) << "\n";
        }
      }
      return 0;
    }

    if (critical->parsed()) {
      const auto pts = critical_points(tau);
      out << "{\"tau\":" << num(tau)
          << ",\"tau_reduced\":" << num(FamilyParameter{tau}.reduced().tau)
          << ",\"points\":[";
      for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i ? "," : "") << point_json(pts[i]);
      out << "]}\n";
      return 0;
    }

    if (biuni->parsed()) {
      const auto u = gauss_sequence(std::size_t(n_biuni));
      const auto hat = unitary_dft(u.entries);
      out << "{\"n\":" << n_biuni << ",\"entries\":[";
      for (std::size_t k = 0; k < u.entries.size(); ++k)
        out << (k ? "," : "") << pair_json(u.entries[k]);
      out << "],\"transform_moduli\":[";
      for (std::size_t k = 0; k < hat.size(); ++k)
        out << (k ? "," : "") << num(std::abs(hat[k]));
      out << "],\"hadamard_residual\":"
          << num(circulant_hadamard_residual(u))
          << ",\"biunimodular\":" << (is_biunimodular(u) ? "true" : "false")
          << "}\n";
      return 0;
    }

    if (verify->parsed()) {
      const auto results = run_acceptance(seed);
      out << "{\"criteria\":[";
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << (i ? "," : "") << "{\"id\":" << r.id << ",\"name\":\""
            << escape(r.name) << "\",\"pass\":" << (r.pass ? "true" : "false")
            << ",\"detail\":\"" << escape(r.detail) << "\"}";
        err << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
            << r.name << " (" << r.detail << ")\n";
      }
      const bool ok = all_pass(results);
      out << "],\"all_pass\":" << (ok ? "true" : "false") << "}\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace sidonlab
