#include "sdg/universal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sdg {

const std::vector<std::string>& injection_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    std::string digits = "1234";
    do out.push_back(digits);
    while (std::next_permutation(digits.begin(), digits.end()));
    return out;
  }();
  return words;
}

int word_rank(const std::string& w) {
  const auto& words = injection_words();
  auto it = std::find(words.begin(), words.end(), w);
  if (it == words.end()) throw std::invalid_argument("unknown injection word " + w);
  return static_cast<int>(it - words.begin()) + 1;
}

SmallObject build_P() {
  std::vector<std::pair<int, int>> pairs = {
      {1, 5}, {2, 5}, {1, 6}, {3, 6}, {1, 7}, {4, 7}, {2, 8}, {3, 8},
      {2, 9}, {4, 9}, {3, 10}, {4, 10},
      {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 10},
      {7, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10}};
  struct Family { int lo, hi, partner; };  // partner = the one survivor among 1..4
  const Family families[] = {{11, 15, 4}, {16, 20, 3}, {21, 25, 2}, {26, 30, 1}};
  for (const auto& fam : families) {
    for (int i = fam.lo; i <= fam.hi; ++i) {
      for (int j = 1; j <= 10; ++j)
        if (j != fam.partner) pairs.emplace_back(j, i);
      for (int j = i + 1; j <= fam.hi; ++j) pairs.emplace_back(i, j);
    }
  }
  for (const auto& fa : families)
    for (const auto& fb : families)
      if (fa.lo < fb.lo)
        for (int i = fa.lo; i <= fa.hi; ++i)
          for (int j = fb.lo; j <= fb.hi; ++j) pairs.emplace_back(i, j);
  for (int k = 31; k <= 53; ++k)
    for (int i = 1; i < k; ++i) pairs.emplace_back(i, k);
  return SmallObject(53, pairs, {});
}

namespace {

struct Entry { int pos; std::vector<int> mono; };
using Row = std::pair<const char*, std::vector<Entry>>;

// the nonzero positions of every f_sigma as printed in the statement of the
// big diagram (positions 1-4 are always (d1,d2,d3,d4))
const std::vector<Row>& injection_table() {
  static const std::vector<Row> table = {
    {"1234", {}},
    {"1243", {{10, {3,4}}, {21, {1,3,4}}, {26, {2,3,4}}, {31, {1,2,3,4}}}},
    {"1324", {{8, {2,3}}, {11, {1,2,3}}, {27, {2,3,4}}, {32, {1,2,3,4}}}},
    {"1342", {{8, {2,3}}, {9, {2,4}}, {11, {1,2,3}}, {16, {1,2,4}}, {28, {2,3,4}}, {33, {1,2,3,4}}}},
    {"1423", {{9, {2,4}}, {10, {3,4}}, {16, {1,2,4}}, {21, {1,3,4}}, {29, {2,3,4}}, {34, {1,2,3,4}}}},
    {"1432", {{8, {2,3}}, {9, {2,4}}, {10, {3,4}}, {11, {1,2,3}}, {16, {1,2,4}}, {21, {1,3,4}}, {30, {2,3,4}}, {35, {1,2,3,4}}}},
    {"2134", {{5, {1,2}}, {12, {1,2,3}}, {17, {1,2,4}}, {36, {1,2,3,4}}}},
    {"2143", {{5, {1,2}}, {10, {3,4}}, {12, {1,2,3}}, {17, {1,2,4}}, {21, {1,3,4}}, {26, {2,3,4}}, {37, {1,2,3,4}}}},
    {"2314", {{5, {1,2}}, {6, {1,3}}, {13, {1,2,3}}, {17, {1,2,4}}, {22, {1,3,4}}, {38, {1,2,3,4}}}},
    {"2341", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {13, {1,2,3}}, {18, {1,2,4}}, {23, {1,3,4}}, {39, {1,2,3,4}}}},
    {"2413", {{5, {1,2}}, {7, {1,4}}, {10, {3,4}}, {12, {1,2,3}}, {18, {1,2,4}}, {24, {1,3,4}}, {26, {2,3,4}}, {40, {1,2,3,4}}}},
    {"2431", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {10, {3,4}}, {13, {1,2,3}}, {18, {1,2,4}}, {25, {1,3,4}}, {26, {2,3,4}}, {41, {1,2,3,4}}}},
    {"3124", {{6, {1,3}}, {8, {2,3}}, {14, {1,2,3}}, {22, {1,3,4}}, {27, {2,3,4}}, {42, {1,2,3,4}}}},
    {"3142", {{6, {1,3}}, {8, {2,3}}, {9, {2,4}}, {14, {1,2,3}}, {16, {1,2,4}}, {22, {1,3,4}}, {28, {2,3,4}}, {43, {1,2,3,4}}}},
    {"3214", {{5, {1,2}}, {6, {1,3}}, {8, {2,3}}, {15, {1,2,3}}, {17, {1,2,4}}, {22, {1,3,4}}, {27, {2,3,4}}, {44, {1,2,3,4}}}},
    {"3241", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {8, {2,3}}, {15, {1,2,3}}, {18, {1,2,4}}, {23, {1,3,4}}, {27, {2,3,4}}, {45, {1,2,3,4}}}},
    {"3412", {{6, {1,3}}, {7, {1,4}}, {8, {2,3}}, {9, {2,4}}, {14, {1,2,3}}, {19, {1,2,4}}, {23, {1,3,4}}, {28, {2,3,4}}, {46, {1,2,3,4}}}},
    {"3421", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {8, {2,3}}, {9, {2,4}}, {15, {1,2,3}}, {20, {1,2,4}}, {23, {1,3,4}}, {28, {2,3,4}}, {47, {1,2,3,4}}}},
    {"4123", {{7, {1,4}}, {9, {2,4}}, {10, {3,4}}, {19, {1,2,4}}, {24, {1,3,4}}, {29, {2,3,4}}, {48, {1,2,3,4}}}},
    {"4132", {{7, {1,4}}, {8, {2,3}}, {9, {2,4}}, {10, {3,4}}, {11, {1,2,3}}, {19, {1,2,4}}, {24, {1,3,4}}, {30, {2,3,4}}, {49, {1,2,3,4}}}},
    {"4213", {{5, {1,2}}, {7, {1,4}}, {9, {2,4}}, {10, {3,4}}, {12, {1,2,3}}, {20, {1,2,4}}, {24, {1,3,4}}, {29, {2,3,4}}, {50, {1,2,3,4}}}},
    {"4231", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {9, {2,4}}, {10, {3,4}}, {13, {1,2,3}}, {20, {1,2,4}}, {25, {1,3,4}}, {29, {2,3,4}}, {51, {1,2,3,4}}}},
    {"4312", {{6, {1,3}}, {7, {1,4}}, {8, {2,3}}, {9, {2,4}}, {10, {3,4}}, {14, {1,2,3}}, {19, {1,2,4}}, {25, {1,3,4}}, {30, {2,3,4}}, {52, {1,2,3,4}}}},
    {"4321", {{5, {1,2}}, {6, {1,3}}, {7, {1,4}}, {8, {2,3}}, {9, {2,4}}, {10, {3,4}}, {15, {1,2,3}}, {20, {1,2,4}}, {25, {1,3,4}}, {30, {2,3,4}}, {53, {1,2,3,4}}}},
  };
  return table;
}

}  // namespace

// Figure 1 rows: which of columns 5/d1d2, 6/d1d3, 7/d1d4, 8/d2d3, 9/d2d4,
// 10/d3d4 are filled.  Column 8 of row 4123 is blank; the running text's
// duplicated position labels there resolve the same way.
const std::array<std::array<int, 6>, 24> kFigure1Filled = {{
    {0,0,0,0,0,0},  // 1234
    {0,0,0,0,0,1},  // 1243
    {0,0,0,1,0,0},  // 1324
    {0,0,0,1,1,0},  // 1342
    {0,0,0,0,1,1},  // 1423
    {0,0,0,1,1,1},  // 1432
    {1,0,0,0,0,0},  // 2134
    {1,0,0,0,0,1},  // 2143
    {1,1,0,0,0,0},  // 2314
    {1,1,1,0,0,0},  // 2341
    {1,0,1,0,0,1},  // 2413
    {1,1,1,0,0,1},  // 2431
    {0,1,0,1,0,0},  // 3124
    {0,1,0,1,1,0},  // 3142
    {1,1,0,1,0,0},  // 3214
    {1,1,1,1,0,0},  // 3241
    {0,1,1,1,1,0},  // 3412
    {1,1,1,1,1,0},  // 3421
    {0,0,1,0,1,1},  // 4123
    {0,0,1,1,1,1},  // 4132
    {1,0,1,0,1,1},  // 4213
    {1,1,1,0,1,1},  // 4231
    {0,1,1,1,1,1},  // 4312
    {1,1,1,1,1,1},  // 4321
}};

// Figure 2 rows: occupied position in each family 11-15 / 16-20 / 21-25 /
// 26-30 (0 = blank cell).
const std::array<std::array<int, 4>, 24> kFigure2Positions = {{
    {0, 0, 0, 0},      // 1234
    {0, 0, 21, 26},    // 1243
    {11, 0, 0, 27},    // 1324
    {11, 16, 0, 28},   // 1342
    {0, 16, 21, 29},   // 1423
    {11, 16, 21, 30},  // 1432
    {12, 17, 0, 0},    // 2134
    {12, 17, 21, 26},  // 2143
    {13, 17, 22, 0},   // 2314
    {13, 18, 23, 0},   // 2341
    {12, 18, 24, 26},  // 2413
    {13, 18, 25, 26},  // 2431
    {14, 0, 22, 27},   // 3124
    {14, 16, 22, 28},  // 3142
    {15, 17, 22, 27},  // 3214
    {15, 18, 23, 27},  // 3241
    {14, 19, 23, 28},  // 3412
    {15, 20, 23, 28},  // 3421
    {0, 19, 24, 29},   // 4123
    {11, 19, 24, 30},  // 4132
    {12, 20, 24, 29},  // 4213
    {13, 20, 25, 29},  // 4231
    {14, 19, 25, 30},  // 4312
    {15, 20, 25, 30},  // 4321
}};

std::vector<Injection> build_injections() {
  SmallObject P = build_P();
  SmallObject cube = SmallObject::cube(4);
  std::vector<Injection> out;
  for (const auto& [word, entries] : injection_table()) {
    std::vector<WeilPoly> coords(53, WeilPoly::zero(cube));
    for (int i = 1; i <= 4; ++i)
      coords[static_cast<std::size_t>(i - 1)] = WeilPoly::var(cube, i);
    for (const auto& e : entries) {
      Monomial m = Monomial::one();
      for (int i : e.mono) m = m.united(Monomial::var(i));
      coords[static_cast<std::size_t>(e.pos - 1)] = WeilPoly::term(cube, m, 1);
    }
    out.push_back({word, PolyMap(cube, P, std::move(coords))});
  }
  return out;
}

PolyMap injection(const std::string& word) {
  static const std::vector<Injection> all = build_injections();
  for (const auto& inj : all)
    if (inj.word == word) return inj.map;
  throw std::invalid_argument("unknown injection word " + word);
}

const std::vector<UniversalEdge>& universal_edges() {
  static const std::vector<UniversalEdge> edges = {
      {"12", "1234", "1243"}, {"12", "1342", "1432"}, {"12", "2341", "2431"},
      {"12", "3421", "4321"}, {"12", "2134", "2143"}, {"12", "3412", "4312"},
      {"13", "1324", "1342"}, {"13", "1243", "1423"}, {"13", "3241", "3421"},
      {"13", "2431", "4231"}, {"13", "3124", "3142"}, {"13", "2413", "4213"},
      {"14", "1423", "1432"}, {"14", "1234", "1324"}, {"14", "4231", "4321"},
      {"14", "2341", "3241"}, {"14", "4123", "4132"}, {"14", "2314", "3214"},
      {"23", "2314", "2341"}, {"23", "2143", "2413"}, {"23", "3142", "3412"},
      {"23", "1432", "4132"}, {"23", "3214", "3241"}, {"23", "1423", "4123"},
      {"24", "2413", "2431"}, {"24", "2134", "2314"}, {"24", "4132", "4312"},
      {"24", "1342", "3142"}, {"24", "4213", "4231"}, {"24", "1324", "3124"},
      {"34", "3412", "3421"}, {"34", "3124", "3214"}, {"34", "4123", "4213"},
      {"34", "1243", "2143"}, {"34", "4312", "4321"}, {"34", "1234", "2134"},
  };
  return edges;
}

SmallObject edge_object(const std::string& pair) {
  static const std::map<std::string, std::pair<int, int>> complement = {
      {"12", {3, 4}}, {"13", {2, 4}}, {"14", {2, 3}},
      {"23", {1, 4}}, {"24", {1, 3}}, {"34", {1, 2}}};
  auto it = complement.find(pair);
  if (it == complement.end()) throw std::invalid_argument("unknown edge pair " + pair);
  return SmallObject(4, {it->second}, {});
}

std::vector<EdgeCheck> verify_edges(const std::vector<Injection>& inj) {
  std::map<std::string, const PolyMap*> by_word;
  for (const auto& i : inj) by_word[i.word] = &i.map;
  std::vector<EdgeCheck> out;
  for (const auto& e : universal_edges()) {
    SmallObject r = edge_object(e.pair);
    PolyMap fu = by_word.at(e.u)->restricted(r);
    PolyMap fv = by_word.at(e.v)->restricted(r);
    EdgeCheck chk{e, fu == fv, ""};
    if (!chk.holds) {
      for (int c = 1; c <= 53 && chk.witness.empty(); ++c) {
        if (fu.coord(c) != fv.coord(c))
          chk.witness = "coordinate " + std::to_string(c) + ": " +
                        fu.coord(c).str() + " vs " + fv.coord(c).str();
      }
    }
    out.push_back(std::move(chk));
  }
  return out;
}

Diagram universal_diagram() {
  Diagram d;
  d.apex = build_P();
  SmallObject cube = SmallObject::cube(4);
  auto injections = build_injections();
  std::map<std::string, int> leg_of_word;
  for (const auto& inj : injections) {
    leg_of_word[inj.word] = static_cast<int>(d.legs.size());
    d.legs.push_back({cube, inj.map});
  }
  for (const auto& e : universal_edges()) {
    SmallObject r = edge_object(e.pair);
    PolyMap incl = PolyMap::inclusion(r, cube);
    d.edges.push_back({r, leg_of_word.at(e.u), leg_of_word.at(e.v), incl, incl});
  }
  return d;
}

}  // namespace sdg
