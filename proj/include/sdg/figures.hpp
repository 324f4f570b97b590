#pragma once

#include "sdg/replay.hpp"

#include <string>

namespace sdg {

// The three displayed tables, byte-stable across runs.  CSV blank cells are
// structural zeros; JSON carries sparse maps.  Figure 3 needs a replay.
std::string figure_csv(int which);
std::string figure_json(int which);

}  // namespace sdg
