#pragma once

#include "sdg/microcube.hpp"
#include "sdg/strong_diff.hpp"
#include "sdg/universal.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sdg {

// the twelve bracket labels (a,b,c,d): the even permutations of 1234 in the
// order the twelve terms are displayed
const std::array<std::array<int, 4>, 12>& term_labels();

// one term of the big identity, from eight arity-4 cubes indexed by word:
//   ((g_abcd -._ab g_abdc) -._1 (g_acdb -._ab g_adcb))
//    -. ((g_bcda -._ab g_bdca) -._1 (g_cdba -._ab g_dcba))
struct TermPieces {
  Microcube inner1, inner2, mid1;
  Microcube inner3, inner4, mid2;
  Microcube term;  // arity 1
};
TermPieces compute_term(const std::map<std::string, Microcube>& cubes, int a, int b,
                        int c, int d);

struct TraceEntry {
  std::string tag;                    // the equation this entry reproduces
  std::string operation;              // "strong_diff_sub" / "tangent_sum"
  std::vector<std::string> inputs;    // operand labels
  Microcube output;
  bool certificate_ok = false;        // mediator route re-substituted exactly
};

struct ProofTrace {
  std::vector<TraceEntry> entries;                      // 84 = 12 steps x 7
  std::array<std::map<int, Rational>, 12> end_vectors;  // position -> d-coefficient
  std::map<int, Rational> total;                        // slotwise sum (must be empty)
  bool total_zero = false;
};

// per-step expected end vectors (position -> +-1), as displayed
const std::array<std::map<int, int>, 12>& expected_end_vectors();

// Replays the thirteen-step computation P-valuedly from the 24 injections.
// Every strong difference is computed twice (closed form and mediator route)
// and must agree; each step's end vector must match the displayed equation,
// and the final tangent sum must vanish.  Mismatches throw with the equation
// tag and a coefficient diff.
ProofTrace replay_theorem_3_2();

}  // namespace sdg
