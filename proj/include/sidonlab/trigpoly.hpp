#ifndef SIDONLAB_TRIGPOLY_HPP
#define SIDONLAB_TRIGPOLY_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace sidonlab {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Reduce an angle to [0, 2*pi).
double canonical_angle(double theta);

// Strictly increasing set of integer frequencies.
class FrequencySet {
public:
  FrequencySet() = default;
  explicit FrequencySet(std::vector<std::int64_t> freqs);

  std::size_t size() const { return freqs_.size(); }
  bool empty() const { return freqs_.empty(); }
  std::int64_t operator[](std::size_t i) const { return freqs_[i]; }
  const std::vector<std::int64_t>& frequencies() const { return freqs_; }

  std::int64_t min() const;
  std::int64_t max() const;
  // Largest |frequency|; 0 for the empty set.
  std::int64_t max_abs() const;

  bool is_normalized() const { return !freqs_.empty() && freqs_.front() == 0; }
  // Shift all frequencies by -min so the smallest becomes 0.
  FrequencySet normalized() const;

  bool operator==(const FrequencySet& o) const { return freqs_ == o.freqs_; }

private:
  std::vector<std::int64_t> freqs_;
};

// f(z) = sum_j c_j z^{lambda_j} restricted to |z| = 1.
struct TrigPolynomial {
  FrequencySet support;
  std::vector<cplx> coefficients;

  TrigPolynomial() = default;
  TrigPolynomial(FrequencySet s, std::vector<cplx> c);

  std::size_t size() const { return coefficients.size(); }

  // Same coefficients on the shifted support; |f| on the circle is unchanged.
  TrigPolynomial normalized() const;
};

struct SupNormCertificate {
  double grid_max = 0.0;        // max |f| over the sample grid, a lower bound
  double certified_upper = 0.0; // grid_max / (1 - N*h/2), an upper bound
  double argmax_angle = 0.0;    // in [0, 2*pi)
  std::size_t grid_size = 0;
};

cplx evaluate(const TrigPolynomial& p, double theta);

double moduli_sum(const TrigPolynomial& p);

// Certified sup norm from grid_size equispaced samples. The Bernstein bound
// ||f'|| <= N ||f|| (N = max |frequency|) turns the grid maximum into the
// two-sided bracket grid_max <= ||f|| <= grid_max / (1 - N*h/2), h = 2*pi/g.
// Requires grid_size > pi * N so the correction factor is positive.
SupNormCertificate sup_norm(const TrigPolynomial& p, std::size_t grid_size);

// Picks a grid size so the certificate's relative slack is about rel_slack.
SupNormCertificate sup_norm_auto(const TrigPolynomial& p,
                                 double rel_slack = 5e-7);

// (1/N) * sum over Nth roots of unity w of |f(e^{i theta} w)|^2.
// Requires a normalized support (min frequency 0).
double roots_of_unity_average(const TrigPolynomial& p, std::size_t N,
                              double theta);

// JSON round-trip: {"frequencies":[int], "coefficients":[[re,im]]}.
std::string to_json(const TrigPolynomial& p);
TrigPolynomial polynomial_from_json(const std::string& text);

} // namespace sidonlab

#endif
