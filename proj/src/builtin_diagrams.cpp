#include "sdg/builtin_diagrams.hpp"

namespace sdg {

namespace {

// (d_1..d_k) -> (d_1..d_k, 0..0) into an object with more generators
PolyMap zero_padded_injection(const SmallObject& src, const SmallObject& tgt) {
  std::vector<WeilPoly> cs;
  for (int i = 1; i <= tgt.gens(); ++i)
    cs.push_back(i <= src.gens() && !src.zeroed(i) ? WeilPoly::var(src, i)
                                                   : WeilPoly::zero(src));
  return PolyMap(src, tgt, std::move(cs));
}

}  // namespace

Diagram lemma_2_2_diagram(int n) {
  Diagram d;
  d.apex = SmallObject(n + 3, {{n + 1, n + 3}, {n + 2, n + 3}}, {});
  SmallObject cube = SmallObject::cube(n + 2);
  SmallObject glue = SmallObject(n + 2, {{n + 1, n + 2}}, {});

  std::vector<WeilPoly> j1, j2;
  for (int i = 1; i <= n + 2; ++i) {
    j1.push_back(WeilPoly::var(cube, i));
    j2.push_back(WeilPoly::var(cube, i));
  }
  j1.push_back(WeilPoly::var(cube, n + 1) * WeilPoly::var(cube, n + 2));
  j2.push_back(WeilPoly::zero(cube));
  d.legs.push_back({cube, PolyMap(cube, d.apex, std::move(j1))});
  d.legs.push_back({cube, PolyMap(cube, d.apex, std::move(j2))});

  PolyMap incl = PolyMap::inclusion(glue, cube);
  d.edges.push_back({glue, 0, 1, incl, incl});
  return d;
}

Diagram lemma_2_1_diagram() { return lemma_2_2_diagram(0); }

Diagram lemma_2_3_diagram() {
  Diagram d;
  d.apex = SmallObject(2, {{1, 2}}, {});
  SmallObject leg1(2, {}, {1});
  SmallObject leg2(2, {}, {2});
  SmallObject point = SmallObject::cube(0);
  d.legs.push_back({leg1, PolyMap::inclusion(leg1, d.apex)});
  d.legs.push_back({leg2, PolyMap::inclusion(leg2, d.apex)});
  d.edges.push_back({point, 0, 1, zero_padded_injection(point, leg1),
                     zero_padded_injection(point, leg2)});
  return d;
}

Diagram lemma_2_4_diagram(int n, int m1, int m2) {
  int total = n + m1 + m2;
  Diagram d;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m2; ++j) pairs.emplace_back(n + i, n + m1 + j);
  d.apex = SmallObject(total, pairs, {});

  std::vector<int> z1, z2;
  for (int i = 1; i <= m1; ++i) z1.push_back(n + i);
  for (int j = 1; j <= m2; ++j) z2.push_back(n + m1 + j);
  SmallObject leg1(total, {}, z1);
  SmallObject leg2(total, {}, z2);
  SmallObject bottom = SmallObject::cube(n);

  d.legs.push_back({leg1, PolyMap::inclusion(leg1, d.apex)});
  d.legs.push_back({leg2, PolyMap::inclusion(leg2, d.apex)});
  d.edges.push_back({bottom, 0, 1, zero_padded_injection(bottom, leg1),
                     zero_padded_injection(bottom, leg2)});
  return d;
}

}  // namespace sdg
