#pragma once

#include "sdg/colimit.hpp"

namespace sdg {

// The four displayed quasi-colimit square diagrams, as checker inputs.

// apex D^3{(1,3),(2,3)}, two D^2 legs via (d1,d2) -> (d1,d2,d1d2) and
// (d1,d2) -> (d1,d2,0), glued over D(2)
Diagram lemma_2_1_diagram();

// the relativized version: apex D^{n+3}{(n+1,n+3),(n+2,n+3)}, legs D^{n+2},
// glued over D^{n+2}{(n+1,n+2)}
Diagram lemma_2_2_diagram(int n);

// apex D^2{(1,2)}, legs D^2{1} and D^2{2}, glued over the point
Diagram lemma_2_3_diagram();

// apex D^{n+m1+m2}{(n+i, n+m1+j)}, legs zero out one block each, glued over D^n
Diagram lemma_2_4_diagram(int n, int m1, int m2);

}  // namespace sdg
