#include "sidonlab/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sidonlab {

double canonical_angle(double theta) {
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0; // fmod can land exactly on 2*pi after the add
  return r;
}

FrequencySet::FrequencySet(std::vector<std::int64_t> freqs)
    : freqs_(std::move(freqs)) {
  for (std::size_t i = 1; i < freqs_.size(); ++i) {
    if (freqs_[i] <= freqs_[i - 1])
      throw std::invalid_argument(
          "FrequencySet: frequencies must be strictly increasing");
  }
}

std::int64_t FrequencySet::min() const {
  if (freqs_.empty()) throw std::logic_error("FrequencySet: empty");
  return freqs_.front();
}

std::int64_t FrequencySet::max() const {
  if (freqs_.empty()) throw std::logic_error("FrequencySet: empty");
  return freqs_.back();
}

std::int64_t FrequencySet::max_abs() const {
  std::int64_t m = 0;
  for (auto f : freqs_) m = std::max(m, std::abs(f));
  return m;
}

FrequencySet FrequencySet::normalized() const {
  if (freqs_.empty()) return *this;
  std::vector<std::int64_t> shifted(freqs_);
  const std::int64_t lo = freqs_.front();
  for (auto& f : shifted) f -= lo;
  return FrequencySet(std::move(shifted));
}

TrigPolynomial::TrigPolynomial(FrequencySet s, std::vector<cplx> c)
    : support(std::move(s)), coefficients(std::move(c)) {
  if (support.size() != coefficients.size())
    throw std::invalid_argument(
        "TrigPolynomial: coefficient count must equal frequency count");
}

TrigPolynomial TrigPolynomial::normalized() const {
  return TrigPolynomial(support.normalized(), coefficients);
}

cplx evaluate(const TrigPolynomial& p, double theta) {
  const double th = canonical_angle(theta);
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < p.size(); ++j)
    acc += p.coefficients[j] * std::polar(1.0, double(p.support[j]) * th);
  return acc;
}

double moduli_sum(const TrigPolynomial& p) {
  double s = 0.0;
  for (const auto& c : p.coefficients) s += std::abs(c);
  return s;
}

namespace {

// Scan |f| over g equispaced angles with per-coefficient rotating phasors,
// re-seeded from std::polar every chunk so phase drift stays ~1e-13.
void grid_scan(const TrigPolynomial& p, std::size_t g, double& best,
               std::size_t& best_idx) {
  const std::size_t n = p.size();
  const double h = two_pi / double(g);
  constexpr std::size_t chunk = 4096;

  std::vector<cplx> step(n), cur(n);
  for (std::size_t j = 0; j < n; ++j)
    step[j] = std::polar(1.0, double(p.support[j]) * h);

  best = 0.0;
  best_idx = 0;
  for (std::size_t base = 0; base < g; base += chunk) {
    const double th0 = double(base) * h;
    for (std::size_t j = 0; j < n; ++j)
      cur[j] = p.coefficients[j] * std::polar(1.0, double(p.support[j]) * th0);
    const std::size_t hi = std::min(base + chunk, g);
    for (std::size_t i = base; i < hi; ++i) {
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) acc += cur[j];
      const double m = std::norm(acc);
      if (m > best) {
        best = m;
        best_idx = i;
      }
      for (std::size_t j = 0; j < n; ++j) cur[j] *= step[j];
    }
  }
  best = std::sqrt(best);
}

} // namespace

SupNormCertificate sup_norm(const TrigPolynomial& p, std::size_t grid_size) {
  const double N = double(p.support.max_abs());
  if (double(grid_size) <= 3.14159265358979324 * N)
    throw std::invalid_argument(
        "sup_norm: grid too coarse to certify (need grid_size > pi * N)");
  double gm = 0.0;
  std::size_t idx = 0;
  grid_scan(p, grid_size, gm, idx);
  const double h = two_pi / double(grid_size);
  SupNormCertificate cert;
  cert.grid_max = gm;
  cert.certified_upper = gm / (1.0 - N * h / 2.0);
  cert.argmax_angle = canonical_angle(double(idx) * h);
  cert.grid_size = grid_size;
  return cert;
}

SupNormCertificate sup_norm_auto(const TrigPolynomial& p, double rel_slack) {
  const double N = double(p.support.max_abs());
  std::size_t g = 1024;
  if (N > 0.0) {
    const double need = 3.14159265358979324 * N / rel_slack;
    while (double(g) < need && g < (std::size_t(1) << 28)) g <<= 1;
  }
  return sup_norm(p, g);
}

double roots_of_unity_average(const TrigPolynomial& p, std::size_t N,
                              double theta) {
  if (N == 0) throw std::invalid_argument("roots_of_unity_average: N >= 1");
  if (!p.support.empty() && p.support.min() != 0)
    throw std::invalid_argument(
        "roots_of_unity_average: support must be normalized (min 0)");
  double acc = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const double th = theta + two_pi * double(k) / double(N);
    acc += std::norm(evaluate(p, th));
  }
  return acc / double(N);
}

std::string to_json(const TrigPolynomial& p) {
  std::ostringstream os;
  os << "{\"frequencies\":[";
  for (std::size_t j = 0; j < p.size(); ++j)
    os << (j ? "," : "") << p.support[j];
  os << "],\"coefficients\":[";
  char buf[64];
  for (std::size_t j = 0; j < p.size(); ++j) {
    std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", p.coefficients[j].real(),
                  p.coefficients[j].imag());
    os << (j ? "," : "") << buf;
  }
  os << "]}";
  return os.str();
}

TrigPolynomial polynomial_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<std::int64_t> freqs =
      doc.at("frequencies").get<std::vector<std::int64_t>>();
  std::vector<cplx> coeffs;
  for (const auto& pair : doc.at("coefficients")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("polynomial_from_json: bad coefficient");
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return TrigPolynomial(FrequencySet(std::move(freqs)), std::move(coeffs));
}

} // namespace sidonlab
