#ifndef SIDONLAB_RNG_HPP
#define SIDONLAB_RNG_HPP

#include <cstdint>

#include "sidonlab/trigpoly.hpp"

namespace sidonlab {

// splitmix64: identical streams on every platform, unlike the standard
// library distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double angle() { return uniform() * two_pi; }
  cplx unit() { return std::polar(1.0, angle()); }
  cplx disc() { // uniform modulus in [0,1), uniform phase
    const double r = uniform();
    return std::polar(r, angle());
  }

private:
  std::uint64_t state_;
};

} // namespace sidonlab

#endif
