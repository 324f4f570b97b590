#pragma once

#include "sdg/permutation.hpp"
#include "sdg/weil_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdg {

// Why a map D^src -> D^tgt can fail to be one.
struct MapDefect {
  enum class Kind { ForbiddenPair, ZeroedIndex, Square, ConstantTerm };
  Kind kind;
  int i = 0, j = 0;     // offending target indices
  WeilPoly residue;     // the nonzero product / coordinate witnessing the failure

  std::string describe() const {
    switch (kind) {
      case Kind::ForbiddenPair:
        return "coords[" + std::to_string(i) + "]*coords[" + std::to_string(j) +
               "] = " + residue.str() + " != 0 for forbidden pair (" +
               std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::ZeroedIndex:
        return "coords[" + std::to_string(i) + "] = " + residue.str() +
               " != 0 for zeroed index " + std::to_string(i);
      case Kind::Square:
        return "coords[" + std::to_string(i) + "]^2 = " + residue.str() +
               " != 0 (d" + std::to_string(i) + "^2 = 0 in target)";
      case Kind::ConstantTerm:
        return "coords[" + std::to_string(i) + "] has constant term " +
               residue.str() + " (maps must preserve the base point)";
    }
    return "";
  }
};

// Map between small objects, one source-algebra polynomial per target generator.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(SmallObject source, SmallObject target, std::vector<WeilPoly> coords)
      : src_(std::move(source)), tgt_(std::move(target)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != tgt_.gens())
      throw std::invalid_argument("coordinate count must match target generators");
    for (const auto& c : coords_)
      if (c.object() != src_) throw std::invalid_argument("coordinate on wrong object");
  }

  static PolyMap identity(const SmallObject& obj) {
    std::vector<WeilPoly> cs;
    for (int i = 1; i <= obj.gens(); ++i) cs.push_back(WeilPoly::var(obj, i));
    return PolyMap(obj, obj, std::move(cs));
  }

  // canonical injection of a strengthening into the base object
  static PolyMap inclusion(const SmallObject& sub, const SmallObject& base) {
    if (!sub.strengthens(base))
      throw std::invalid_argument("inclusion: not a strengthening");
    std::vector<WeilPoly> cs;
    for (int i = 1; i <= base.gens(); ++i)
      cs.push_back(sub.zeroed(i) ? WeilPoly::zero(sub) : WeilPoly::var(sub, i));
    return PolyMap(sub, base, std::move(cs));
  }

  const SmallObject& source() const { return src_; }
  const SmallObject& target() const { return tgt_; }
  const std::vector<WeilPoly>& coords() const { return coords_; }
  const WeilPoly& coord(int j) const { return coords_[static_cast<std::size_t>(j - 1)]; }

  // Substitute the coordinates into p and reduce; an algebra homomorphism
  // whenever the map is well defined.
  WeilPoly pullback(const WeilPoly& p) const {
    if (p.object() != tgt_) throw std::invalid_argument("pullback: object mismatch");
    WeilPoly out = WeilPoly::zero(src_);
    for (const auto& [m, c] : p.terms()) {
      WeilPoly prod = WeilPoly::constant(src_, c);
      for (int j : m.indices()) {
        prod = prod * coord(j);
        if (prod.is_zero()) break;
      }
      out += prod;
    }
    return out;
  }

  // this o g
  PolyMap after(const PolyMap& g) const {
    if (g.target() != src_) throw std::invalid_argument("compose: object mismatch");
    std::vector<WeilPoly> cs;
    cs.reserve(coords_.size());
    for (const auto& c : coords_) cs.push_back(g.pullback(c));
    return PolyMap(g.source(), tgt_, std::move(cs));
  }

  // Soundness as a map of small objects: every target relation must pull back
  // to zero (forbidden pairs, zeroed indices, the implicit squares), and the
  // base point must go to the base point.
  std::optional<MapDefect> defect() const {
    for (int j = 1; j <= tgt_.gens(); ++j) {
      Rational c0 = coord(j).coeff(Monomial::one());
      if (c0 != 0)
        return MapDefect{MapDefect::Kind::ConstantTerm, j, 0,
                         WeilPoly::constant(src_, c0)};
    }
    for (int j = 1; j <= tgt_.gens(); ++j) {
      if (tgt_.zeroed(j) && !coord(j).is_zero())
        return MapDefect{MapDefect::Kind::ZeroedIndex, j, 0, coord(j)};
      WeilPoly sq = coord(j) * coord(j);
      if (!sq.is_zero()) return MapDefect{MapDefect::Kind::Square, j, 0, sq};
    }
    for (auto [i, j] : tgt_.forbidden_pairs()) {
      WeilPoly prod = coord(i) * coord(j);
      if (!prod.is_zero()) return MapDefect{MapDefect::Kind::ForbiddenPair, i, j, prod};
    }
    return std::nullopt;
  }
  bool well_defined() const { return !defect().has_value(); }

  // restriction along the canonical injection sub -> source
  PolyMap restricted(const SmallObject& sub) const {
    std::vector<WeilPoly> cs;
    cs.reserve(coords_.size());
    for (const auto& c : coords_) cs.push_back(c.restricted(sub));
    return PolyMap(sub, tgt_, std::move(cs));
  }

  // gamma^sigma: (d_1..d_n) |-> gamma(d_{sigma^-1(1)},..,d_{sigma^-1(n)}).
  // Source relations must be sigma-stable (trivially so for full cubes).
  PolyMap permuted(const Permutation& sigma) const {
    if (sigma.size() != src_.gens())
      throw std::invalid_argument("permute: arity mismatch");
    Permutation inv = sigma.inverse();
    SmallObject new_src = transport_source(inv);
    if (new_src != src_)
      throw std::invalid_argument("permute: source relations not preserved");
    std::vector<WeilPoly> cs;
    cs.reserve(coords_.size());
    for (const auto& c : coords_) {
      WeilPoly q(src_);
      for (const auto& [m, v] : c.terms()) {
        Monomial t = Monomial::one();
        for (int k : m.indices()) t = t.united(Monomial::var(inv(k)));
        q.add_term(t, v);
      }
      cs.push_back(std::move(q));
    }
    return PolyMap(src_, tgt_, std::move(cs));
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

 private:
  SmallObject transport_source(const Permutation& inv) const {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : src_.forbidden_pairs()) pairs.emplace_back(inv(i), inv(j));
    std::vector<int> zer;
    for (int i : src_.zeroed_indices()) zer.push_back(inv(i));
    return SmallObject(src_.gens(), pairs, zer);
  }

  SmallObject src_, tgt_;
  std::vector<WeilPoly> coords_;
};

}  // namespace sdg
