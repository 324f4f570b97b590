#pragma once

#include "sdg/colimit.hpp"
#include "sdg/poly_map.hpp"

#include <array>
#include <string>
#include <vector>

namespace sdg {

// The 24 even/odd-labelled words, lexicographic.
const std::vector<std::string>& injection_words();
int word_rank(const std::string& w);  // 1-based lexicographic rank

// The universal 53-generator object receiving all 24 injections.
//
// Forbidden pairs, expanded from the label:
//   - explicit pairs among 1..10;
//   - generators 11-15 pair only with 4, 16-20 only with 3, 21-25 only with 2,
//     26-30 only with 1 (forbidden against everything else, each other
//     included);
//   - generators 31-53 pair with nothing.
// The label's constraint line prints "1 <= i_{11,15} <= 15" where the
// surrounding structure requires the lower bound 11 (see audit notes); the
// expansion below uses 11.
SmallObject build_P();

// f_sigma : D^4 -> P as printed, positions 5-30 cross-checked against the
// displayed tables.  All 24 maps are well defined into P (verified by tests).
struct Injection {
  std::string word;
  PolyMap map;
};
std::vector<Injection> build_injections();
PolyMap injection(const std::string& word);

// table data for the displayed figures (independent transcription, used to
// arbitrate the running text and to emit the table artifacts)
// figure 1: per word, presence of the six degree-2 positions 5..10
extern const std::array<std::array<int, 6>, 24> kFigure1Filled;
// figure 2: per word, the occupied position in each degree-3 family
// (11-15 / 16-20 / 21-25 / 26-30), 0 = blank
extern const std::array<std::array<int, 4>, 24> kFigure2Positions;

// the six R-object labels and the 36 edge instances of the big diagram
struct UniversalEdge {
  std::string pair;     // "12".."34": the subscript of R
  std::string u, v;     // the two injection words it connects
};
const std::vector<UniversalEdge>& universal_edges();
// R_{ab} is D^4 with the complementary pair forbidden
SmallObject edge_object(const std::string& pair);

struct EdgeCheck {
  UniversalEdge edge;
  bool holds;
  std::string witness;  // first differing coordinate/monomial when violated
};
std::vector<EdgeCheck> verify_edges(const std::vector<Injection>& inj);

// the full 24-leg, 36-edge cone over P
Diagram universal_diagram();

}  // namespace sdg
