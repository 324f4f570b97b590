#pragma once

#include "sdg/vector_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdg {

// seeded random microsquare pair agreeing off the d1d2 slot (the antisymmetry
// hypothesis), and a random microcube sextuple satisfying the six restriction
// hypotheses of the three-dimensional identity
std::pair<Microcube, Microcube> random_compatible_microsquares(SplitMix64& rng, int m,
                                                               int coeff_range);
std::vector<Microcube> random_compatible_sextuple(SplitMix64& rng, int m,
                                                  int coeff_range);

// eight arity-4 microcubes over Q^m satisfying the nesting proposition's
// hypothesis system (free slots sampled, constrained slots completed)
std::vector<Microcube> random_nestable_octuple(SplitMix64& rng, int m, int coeff_range);

struct IdentityRun {
  std::string identity;
  int trials = 0;
  int failures = 0;
  std::int64_t first_failing_trial = -1;
  bool ok() const { return failures == 0; }
};

// identity in {"1.1","1.2","1.3","1.4","1.5"}: antisymmetry of the bracket,
// microsquare antisymmetry, the Jacobi identity, the three-dimensional
// microcube identity, the twelve-term four-dimensional identity
IdentityRun verify_identity(const std::string& identity, std::uint64_t seed, int trials,
                            int m, int degree, int coeff_range);

}  // namespace sdg
