#pragma once

#include "sdg/exact_linalg.hpp"
#include "sdg/microcube.hpp"
#include "sdg/replay.hpp"
#include "sdg/splitmix64.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sdg {

// 24 microcubes D^4 -> Q^m with a shared base point, satisfying all 36
// restriction hypotheses of the big identity.
struct ModelFamily {
  std::uint64_t seed = 0;
  int m = 0;
  std::map<std::string, Microcube> cubes;
};

// The hypothesis system on the stacked 24x16 coefficient space: one row per
// edge per surviving monomial slot.  Shared by the family sampler and the
// negative controls; same elimination core as the colimit checker.
class HypothesisSystem {
 public:
  HypothesisSystem();

  const RowReduction& reduction() const { return *reduction_; }
  int stacked_dim() const { return 24 * 16; }
  int slot(const std::string& word, Monomial m) const;

  // free slots sampled as integers in [-range, range]; constrained slots
  // completed by the reduction
  std::vector<Rational> sample(SplitMix64& rng, int coeff_range) const;

 private:
  std::vector<Monomial> d4_basis_;
  std::map<std::uint64_t, int> mono_index_;
  std::unique_ptr<RowReduction> reduction_;
};

ModelFamily random_compatible_family(std::uint64_t seed, int m, int coeff_range);

// the universal family read coordinatewise: gamma_sigma = f_sigma into Q^53
ModelFamily universal_family_as_model();

struct HypothesisViolation {
  std::string u, v, pair;
  std::string detail;
};

// checks all 36 hypotheses; nullopt when the family is admissible
std::optional<HypothesisViolation> family_hypothesis_defect(const ModelFamily& f);

struct ModelVerification {
  std::vector<TangentVector> terms;  // the twelve summands
  TangentVector sum;
  bool zero = false;
};

// Computes the twelve terms over Q^m and their tangent sum.  Throws
// std::invalid_argument when a hypothesis is violated (a corrupted family is
// rejected at the precondition, never evaluated to a spurious answer).
ModelVerification verify_theorem_3_2_model(const ModelFamily& f);

}  // namespace sdg
