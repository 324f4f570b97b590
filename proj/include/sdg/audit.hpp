#pragma once

#include "sdg/colimit.hpp"
#include "sdg/universal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdg {

// Outcome of auditing the 24-injection cone over P: soundness of the maps,
// the 36 edge equalities, the exact dimensions of the linearized problem, and
// the uniqueness finding.
struct AuditResult {
  bool injections_well_defined = false;
  std::vector<std::string> injection_defects;
  std::vector<EdgeCheck> edges;
  bool all_edges_hold = false;

  ColimitReport report;

  // d3*d5 - d12 - d13 - d15 tested by explicit pullback under all 24 legs
  bool candidate_kernel_element_vanishes = false;
  std::string candidate_kernel_element;

  int mediate_trials = 0;
  int mediate_failures = 0;

  std::vector<std::string> notes;  // typo resolutions and findings
};

// runs the full audit; mediate_trials seeded random compatible families are
// pushed through the mediator and round-tripped
AuditResult audit_theorem_3_1(int mediate_trials = 1000, std::uint64_t seed = 20240901,
                              int coeff_range = 9);

std::string render_audit_markdown(const AuditResult& a);

}  // namespace sdg
