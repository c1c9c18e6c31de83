#ifndef SIDONLAB_ACCEPTANCE_HPP
#define SIDONLAB_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sidonlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The twelve verification criteria, in order. Deterministic for a fixed
// seed; runs in well under two minutes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240101);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace sidonlab

#endif
