#pragma once

#include "sdg/microcube.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdg {

struct AgreementDefect {
  int coord;    // 1-based coordinate
  Monomial slot;
  std::string describe() const {
    return "coordinate " + std::to_string(coord) + " differs on monomial " + slot.str();
  }
};

// gamma1 | D^n{(i,j)} = gamma2 | D^n{(i,j)}: all coefficients away from
// monomials containing both i and j coincide.
inline std::optional<AgreementDefect> agreement_defect(const Microcube& g1,
                                                       const Microcube& g2, int i, int j) {
  if (!g1.same_shape(g2)) throw std::invalid_argument("shape mismatch");
  Monomial pair = Monomial::of({i, j});
  for (int c = 1; c <= g1.dim(); ++c) {
    const WeilPoly &p = g1.coord(c), &q = g2.coord(c);
    for (const auto& [m, v] : p.terms())
      if (!m.contains_all(pair) && q.coeff(m) != v) return AgreementDefect{c, m};
    for (const auto& [m, v] : q.terms())
      if (!m.contains_all(pair) && p.coeff(m) != v) return AgreementDefect{c, m};
  }
  return std::nullopt;
}

inline bool agrees_on_pair(const Microcube& g1, const Microcube& g2, int i, int j) {
  return !agreement_defect(g1, g2, i, j).has_value();
}

// The unique filler N : D^{n+3}{(n+1,n+3),(n+2,n+3)} -> target with
// N o j1 = gamma1 and N o j2 = gamma2, computed per coordinate as
//   N = gamma2 + sum_{T subset {1..n}} (a1_{T u {n+1,n+2}} - a2_{T u {n+1,n+2}}) d^T d_{n+3}.
struct Mediator {
  SmallObject source;            // D^{n+3}{(n+1,n+3),(n+2,n+3)}
  int arity;                     // the n+2 of the inputs
  std::optional<SmallObject> target_object;
  std::vector<WeilPoly> coords;

  // j1: (d_1..d_{n+2}) -> (d_1..d_{n+2}, d_{n+1} d_{n+2});  j2 appends 0
  PolyMap j1() const { return j_map(true); }
  PolyMap j2() const { return j_map(false); }

  // substitution (d_1..d_n, 0, 0, d_{n+1}); the strong difference
  std::vector<WeilPoly> eval_strong_slice() const {
    int n = arity - 2;
    SmallObject cube = SmallObject::cube(n + 1);
    std::vector<WeilPoly> out;
    for (const auto& c : coords) {
      WeilPoly q(cube);
      for (const auto& [m, v] : c.terms()) {
        if (m.contains(n + 1) || m.contains(n + 2)) continue;
        Monomial t = Monomial::one();
        for (int k : m.indices())
          t = t.united(Monomial::var(k <= n ? k : n + 1));
        q.add_term(t, v);
      }
      out.push_back(std::move(q));
    }
    return out;
  }

 private:
  PolyMap j_map(bool with_product) const {
    int n = arity - 2;
    SmallObject cube = SmallObject::cube(arity);
    std::vector<WeilPoly> cs;
    for (int i = 1; i <= arity; ++i) cs.push_back(WeilPoly::var(cube, i));
    if (with_product)
      cs.push_back(WeilPoly::var(cube, n + 1) * WeilPoly::var(cube, n + 2));
    else
      cs.push_back(WeilPoly::zero(cube));
    return PolyMap(cube, source, std::move(cs));
  }
};

inline SmallObject mediator_source(int arity) {
  int n = arity - 2;
  return SmallObject(arity + 1, {{n + 1, n + 3}, {n + 2, n + 3}}, {});
}

// Builds the mediator and checks its certificate (N o j1 = gamma1,
// N o j2 = gamma2 by exact substitution); for small-object targets the
// well-definedness of N into the target is verified as well.
inline Mediator mediator(const Microcube& g1, const Microcube& g2) {
  int arity = g1.arity();
  int n = arity - 2;
  if (n < 0) throw std::invalid_argument("mediator: arity must be at least 2");
  if (auto d = agreement_defect(g1, g2, n + 1, n + 2))
    throw std::invalid_argument("mediator: inputs disagree off the last pair: " +
                                d->describe());

  Mediator med;
  med.source = mediator_source(arity);
  med.arity = arity;
  med.target_object = g1.target_object();

  Monomial last_pair = Monomial::of({n + 1, n + 2});
  for (int c = 1; c <= g1.dim(); ++c) {
    WeilPoly out(med.source);
    for (const auto& [m, v] : g2.coord(c).terms()) out.add_term(m, v);
    for (const auto& [m, v] : g1.coord(c).terms()) {
      if (!m.contains_all(last_pair)) continue;
      Monomial t = m.minus(last_pair);
      Rational diff = v - g2.coord(c).coeff(m);
      out.add_term(t.united(Monomial::var(arity + 1)), diff);
    }
    for (const auto& [m, v] : g2.coord(c).terms()) {
      if (!m.contains_all(last_pair)) continue;
      if (g1.coord(c).coeff(m) != 0) continue;  // handled above
      Monomial t = m.minus(last_pair);
      out.add_term(t.united(Monomial::var(arity + 1)), -v);
    }
    med.coords.push_back(std::move(out));
  }

  // certificate: the two composites reproduce the inputs exactly
  PolyMap j1 = med.j1(), j2 = med.j2();
  for (int c = 1; c <= g1.dim(); ++c) {
    WeilPoly via1 = j1.pullback(med.coords[static_cast<std::size_t>(c - 1)]);
    WeilPoly via2 = j2.pullback(med.coords[static_cast<std::size_t>(c - 1)]);
    if (via1 != g1.coord(c) || via2 != g2.coord(c))
      throw std::logic_error("mediator certificate failed at coordinate " +
                             std::to_string(c));
  }

  if (med.target_object) {
    PolyMap as_map(med.source, *med.target_object, med.coords);
    if (auto d = as_map.defect())
      throw std::invalid_argument("mediator not well-defined into target: " +
                                  d->describe());
  }
  return med;
}

// gamma1 -. gamma2 relative to the first n variables: closed-form coefficients
// (common part on subsets of {1..n}; the d-linear part is the coefficient gap
// on T u {n+1,n+2}).
inline Microcube strong_diff(const Microcube& g1, const Microcube& g2) {
  int arity = g1.arity();
  int n = arity - 2;
  if (n < 0) throw std::invalid_argument("strong_diff: arity must be at least 2");
  if (auto d = agreement_defect(g1, g2, n + 1, n + 2))
    throw std::invalid_argument("strong_diff: inputs disagree off the last pair: " +
                                d->describe());

  SmallObject cube = SmallObject::cube(n + 1);
  Monomial last_pair = Monomial::of({n + 1, n + 2});
  std::uint64_t low_mask = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);

  std::vector<WeilPoly> coords;
  for (int c = 1; c <= g1.dim(); ++c) {
    WeilPoly q(cube);
    for (const auto& [m, v] : g1.coord(c).terms())
      if ((m.mask() & ~low_mask) == 0) q.add_term(m, v);
    auto gap = [&](const Monomial& m) {
      return g1.coord(c).coeff(m) - g2.coord(c).coeff(m);
    };
    for (const auto& [m, v] : g1.coord(c).terms()) {
      if (!m.contains_all(last_pair) || (m.minus(last_pair).mask() & ~low_mask)) continue;
      Rational d = gap(m);
      if (d != 0) q.add_term(m.minus(last_pair).united(Monomial::var(n + 1)), d);
    }
    for (const auto& [m, v] : g2.coord(c).terms()) {
      if (!m.contains_all(last_pair) || (m.minus(last_pair).mask() & ~low_mask)) continue;
      if (g1.coord(c).coeff(m) != 0) continue;
      q.add_term(m.minus(last_pair).united(Monomial::var(n + 1)), -v);
    }
    coords.push_back(std::move(q));
  }
  if (g1.target_object())
    return Microcube::into_object(n + 1, *g1.target_object(), std::move(coords));
  return Microcube::into_space(n + 1, std::move(coords));
}

// the same value through the mediator route; the closed form must agree
inline Microcube strong_diff_via_mediator(const Microcube& g1, const Microcube& g2) {
  Mediator med = mediator(g1, g2);
  auto coords = med.eval_strong_slice();
  if (g1.target_object())
    return Microcube::into_object(g1.arity() - 1, *g1.target_object(), std::move(coords));
  return Microcube::into_space(g1.arity() - 1, std::move(coords));
}

// extends a subscript (sigma(1)..sigma(n)) to the full permutation with the
// remaining two images in ascending order
inline Permutation subscript_permutation(const std::vector<int>& subscript, int arity) {
  int n = arity - 2;
  if (static_cast<int>(subscript.size()) != n)
    throw std::invalid_argument("subscript length must be arity-2");
  std::vector<bool> seen(static_cast<std::size_t>(arity), false);
  std::vector<int> img = subscript;
  for (int v : subscript) {
    if (v < 1 || v > arity || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("subscript not injective / out of range");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (int v = 1; v <= arity; ++v)
    if (!seen[static_cast<std::size_t>(v - 1)]) img.push_back(v);
  return Permutation(img);
}

// gamma1 -._{sigma(1)..sigma(n)} gamma2 = (gamma1)^sigma -._{1..n} (gamma2)^sigma
inline Microcube strong_diff_sub(const Microcube& g1, const Microcube& g2,
                                 const std::vector<int>& subscript) {
  Permutation sigma = subscript_permutation(subscript, g1.arity());
  return strong_diff(g1.permuted(sigma), g2.permuted(sigma));
}

// agreement on a multi-pair restriction D^n{p_1,..,p_k}: coefficients must
// coincide on every monomial containing none of the pairs
inline std::optional<AgreementDefect> agreement_defect_multi(
    const Microcube& g1, const Microcube& g2,
    const std::vector<std::pair<int, int>>& pairs) {
  if (!g1.same_shape(g2)) throw std::invalid_argument("shape mismatch");
  auto survives = [&](Monomial m) {
    for (auto [i, j] : pairs)
      if (m.contains(i) && m.contains(j)) return false;
    return true;
  };
  for (int c = 1; c <= g1.dim(); ++c) {
    const WeilPoly &p = g1.coord(c), &q = g2.coord(c);
    for (const auto& [m, v] : p.terms())
      if (survives(m) && q.coeff(m) != v) return AgreementDefect{c, m};
    for (const auto& [m, v] : q.terms())
      if (survives(m) && p.coeff(m) != v) return AgreementDefect{c, m};
  }
  return std::nullopt;
}

// Binary tangent addition through the D(2) route: base + v1 d1 + v2 d2 is a
// well-defined D(2)-point map, and its diagonal restriction is the sum.  The
// componentwise tangent_add must agree; kept as an independent cross-check.
inline TangentVector tangent_add_via_d2(const TangentVector& a, const TangentVector& b) {
  if (a.base != b.base) throw std::invalid_argument("tangent_add: base point mismatch");
  SmallObject d2 = SmallObject::dn(2);
  SmallObject line = SmallObject::cube(1);
  TangentVector out;
  out.base = a.base;
  for (std::size_t i = 0; i < a.linear.size(); ++i) {
    WeilPoly ell(d2);
    ell.add_term(Monomial::one(), a.base[i]);
    ell.add_term(Monomial::var(1), a.linear[i]);
    ell.add_term(Monomial::var(2), b.linear[i]);
    // diagonal d |-> (d, d) lands in D(2) because d*d = 0
    PolyMap diag(line, d2, {WeilPoly::var(line, 1), WeilPoly::var(line, 1)});
    WeilPoly restricted = diag.pullback(ell);
    out.linear.push_back(restricted.coeff(Monomial::var(1)));
  }
  return out;
}

struct NestabilityWitness {
  std::string hypothesis;  // which restriction equality failed
  AgreementDefect defect;
  std::string describe() const { return hypothesis + ": " + defect.describe(); }
};

// The two statements of the nesting proposition for arity-4 microcubes:
// given the stated restriction hypotheses, every nested strong difference in
// ((g1 -._12 g2) -._1 (g3 -._12 g4)) [-. the same for g5..g8] is well defined.
// Checks the hypotheses, then the derived agreements; a false return from the
// derived stage would refute the proposition on this instance.
inline bool nestable_check(const std::vector<Microcube>& gs,
                           NestabilityWitness* witness = nullptr) {
  if (gs.size() != 4 && gs.size() != 8)
    throw std::invalid_argument("nestable_check: needs 4 or 8 microcubes");
  for (const auto& g : gs)
    if (g.arity() != 4 || !g.same_shape(gs[0]))
      throw std::invalid_argument("nestable_check: arity-4 microcubes of equal shape");

  auto fail = [&](std::string which, const AgreementDefect& d) {
    if (witness) *witness = {std::move(which), d};
    return false;
  };
  auto check_pair34 = [&](int u, int v) -> std::optional<AgreementDefect> {
    return agreement_defect(gs[static_cast<std::size_t>(u - 1)],
                            gs[static_cast<std::size_t>(v - 1)], 3, 4);
  };

  // stated hypotheses
  std::vector<std::pair<int, int>> last_agreements = {{1, 2}, {3, 4}};
  if (gs.size() == 8) { last_agreements.push_back({5, 6}); last_agreements.push_back({7, 8}); }
  for (auto [u, v] : last_agreements)
    if (auto d = check_pair34(u, v))
      return fail("gamma" + std::to_string(u) + "|D4{(3,4)} = gamma" +
                  std::to_string(v) + "|D4{(3,4)}", *d);
  const std::vector<std::pair<int, int>> mid_pairs = {{2, 3}, {2, 4}};
  std::vector<std::pair<int, int>> mid_agreements = {{1, 3}, {2, 4}};
  if (gs.size() == 8) { mid_agreements.push_back({5, 7}); mid_agreements.push_back({6, 8}); }
  for (auto [u, v] : mid_agreements)
    if (auto d = agreement_defect_multi(gs[static_cast<std::size_t>(u - 1)],
                                        gs[static_cast<std::size_t>(v - 1)], mid_pairs))
      return fail("gamma" + std::to_string(u) + "|D4{(2,3),(2,4)} = gamma" +
                  std::to_string(v) + "|D4{(2,3),(2,4)}", *d);
  if (gs.size() == 8) {
    const std::vector<std::pair<int, int>> top_pairs = {{1, 2}, {1, 3}, {1, 4}};
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 7}, {4, 8}})
      if (auto d = agreement_defect_multi(gs[static_cast<std::size_t>(u - 1)],
                                          gs[static_cast<std::size_t>(v - 1)], top_pairs))
        return fail("gamma" + std::to_string(u) + "|D4{(1,2),(1,3),(1,4)} = gamma" +
                    std::to_string(v) + "|D4{(1,2),(1,3),(1,4)}", *d);
  }

  // derived agreements: each nested difference must be well defined
  Microcube a = strong_diff_sub(gs[0], gs[1], {1, 2});
  Microcube b = strong_diff_sub(gs[2], gs[3], {1, 2});
  if (auto d = agreement_defect(a, b, 2, 3))
    return fail("(g1 -._12 g2)|D3{(2,3)} = (g3 -._12 g4)|D3{(2,3)}", *d);
  if (gs.size() == 8) {
    Microcube c = strong_diff_sub(gs[4], gs[5], {1, 2});
    Microcube e = strong_diff_sub(gs[6], gs[7], {1, 2});
    if (auto d = agreement_defect(c, e, 2, 3))
      return fail("(g5 -._12 g6)|D3{(2,3)} = (g7 -._12 g8)|D3{(2,3)}", *d);
    Microcube left = strong_diff_sub(a, b, {1});
    Microcube right = strong_diff_sub(c, e, {1});
    if (auto d = agreement_defect(left, right, 1, 2))
      return fail("outer difference agreement on D2{(1,2)}", *d);
  }
  return true;
}

}  // namespace sdg
