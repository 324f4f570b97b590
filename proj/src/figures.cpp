#include "sdg/figures.hpp"

#include "sdg/universal.hpp"

#include <json.hpp>

#include <array>
#include <sstream>
#include <stdexcept>

namespace sdg {

namespace {

using nlohmann::json;

const std::array<const char*, 6> kDeg2Cols = {"d1d2", "d1d3", "d1d4",
                                              "d2d3", "d2d4", "d3d4"};
const std::array<const char*, 4> kDeg3Cols = {"d1d2d3", "d1d2d4", "d1d3d4", "d2d3d4"};
const std::array<const char*, 12> kTermCols = {"1/12", "2/13", "3/14", "4/21",
                                               "5/23", "6/24", "7/31", "8/32",
                                               "9/34", "10/41", "11/42", "12/43"};

std::string coeff_cell(const Rational& c) {
  if (c == 0) return "";
  if (c == 1) return "d";
  if (c == -1) return "-d";
  return c.str() + "d";
}

}  // namespace

std::string figure_csv(int which) {
  std::ostringstream os;
  const auto& words = injection_words();
  if (which == 1) {
    os << "";
    for (int c = 0; c < 6; ++c) os << "," << (c + 5) << "/" << kDeg2Cols[static_cast<std::size_t>(c)];
    os << "\n";
    for (std::size_t r = 0; r < words.size(); ++r) {
      os << words[r];
      for (int c = 0; c < 6; ++c)
        os << "," << (kFigure1Filled[r][static_cast<std::size_t>(c)]
                          ? kDeg2Cols[static_cast<std::size_t>(c)]
                          : "");
      os << "\n";
    }
  } else if (which == 2) {
    const char* fam[4] = {"11-15", "16-20", "21-25", "26-30"};
    for (int c = 0; c < 4; ++c) os << "," << fam[c] << "/" << kDeg3Cols[static_cast<std::size_t>(c)];
    os << "\n";
    for (std::size_t r = 0; r < words.size(); ++r) {
      os << words[r];
      for (int c = 0; c < 4; ++c) {
        int pos = kFigure2Positions[r][static_cast<std::size_t>(c)];
        os << ",";
        if (pos) os << pos;
      }
      os << "\n";
    }
  } else if (which == 3) {
    ProofTrace trace = replay_theorem_3_2();
    for (const auto* col : kTermCols) os << "," << col;
    os << "\n";
    for (int pos = 31; pos <= 53; ++pos) {
      os << pos << "/" << words[static_cast<std::size_t>(pos - 30)];
      for (int t = 0; t < 12; ++t) {
        const auto& vec = trace.end_vectors[static_cast<std::size_t>(t)];
        auto it = vec.find(pos);
        os << "," << (it == vec.end() ? "" : coeff_cell(it->second));
      }
      os << "\n";
    }
  } else {
    throw std::invalid_argument("figure must be 1, 2 or 3");
  }
  return os.str();
}

std::string figure_json(int which) {
  const auto& words = injection_words();
  json doc;
  doc["schema"] = "sdg.figure/1";
  doc["figure"] = which;
  if (which == 1) {
    json cols = json::array();
    for (int c = 0; c < 6; ++c)
      cols.push_back({{"position", c + 5}, {"monomial", kDeg2Cols[static_cast<std::size_t>(c)]}});
    doc["columns"] = cols;
    json rows = json::array();
    for (std::size_t r = 0; r < words.size(); ++r) {
      json filled = json::array();
      for (int c = 0; c < 6; ++c)
        if (kFigure1Filled[r][static_cast<std::size_t>(c)]) filled.push_back(c + 5);
      rows.push_back({{"sigma", words[r]}, {"filled_positions", filled}});
    }
    doc["rows"] = rows;
  } else if (which == 2) {
    json cols = json::array();
    const std::array<std::pair<int, int>, 4> fam = {{{11, 15}, {16, 20}, {21, 25}, {26, 30}}};
    for (int c = 0; c < 4; ++c)
      cols.push_back({{"family", {fam[static_cast<std::size_t>(c)].first,
                                  fam[static_cast<std::size_t>(c)].second}},
                      {"monomial", kDeg3Cols[static_cast<std::size_t>(c)]}});
    doc["columns"] = cols;
    json rows = json::array();
    for (std::size_t r = 0; r < words.size(); ++r) {
      json occupied = json::array();
      for (int c = 0; c < 4; ++c) {
        int pos = kFigure2Positions[r][static_cast<std::size_t>(c)];
        occupied.push_back(pos ? json(pos) : json(nullptr));
      }
      rows.push_back({{"sigma", words[r]}, {"occupied_positions", occupied}});
    }
    doc["rows"] = rows;
  } else if (which == 3) {
    ProofTrace trace = replay_theorem_3_2();
    doc["columns"] = kTermCols;
    json rows = json::array();
    for (int pos = 31; pos <= 53; ++pos) {
      json entries = json::array();
      for (int t = 0; t < 12; ++t) {
        const auto& vec = trace.end_vectors[static_cast<std::size_t>(t)];
        auto it = vec.find(pos);
        if (it != vec.end())
          entries.push_back({{"term", t + 1}, {"coeff", it->second.str()}});
      }
      rows.push_back({{"position", pos},
                      {"sigma", words[static_cast<std::size_t>(pos - 30)]},
                      {"entries", entries}});
    }
    doc["rows"] = rows;
  } else {
    throw std::invalid_argument("figure must be 1, 2 or 3");
  }
  return doc.dump(2) + "\n";
}

}  // namespace sdg
