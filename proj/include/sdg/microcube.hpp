#pragma once

#include "sdg/poly_map.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sdg {

// d |-> base + d*linear in Q^m; addable only at a shared base point.
struct TangentVector {
  std::vector<Rational> base, linear;

  friend bool operator==(const TangentVector& a, const TangentVector& b) {
    return a.base == b.base && a.linear == b.linear;
  }

  bool linear_zero() const {
    for (const auto& v : linear)
      if (v != 0) return false;
    return true;
  }
};

inline TangentVector tangent_negated(TangentVector t) {
  for (auto& v : t.linear) v = -v;
  return t;
}

inline TangentVector tangent_add(std::span<const TangentVector> ts) {
  if (ts.empty()) throw std::invalid_argument("tangent_add: empty list");
  TangentVector out = ts[0];
  for (std::size_t k = 1; k < ts.size(); ++k) {
    if (ts[k].base != out.base)
      throw std::invalid_argument("tangent_add: base point mismatch");
    if (ts[k].linear.size() != out.linear.size())
      throw std::invalid_argument("tangent_add: dimension mismatch");
    for (std::size_t i = 0; i < out.linear.size(); ++i) out.linear[i] += ts[k].linear[i];
  }
  return out;
}

inline TangentVector tangent_add(const TangentVector& a, const TangentVector& b) {
  const TangentVector ts[2] = {a, b};
  return tangent_add(std::span<const TangentVector>(ts, 2));
}

// Map D^n -> target where target is either a small object (the universal
// route) or the coordinate space Q^m (the model route; constant terms carry
// the base point).
class Microcube {
 public:
  Microcube() = default;

  static Microcube into_object(int arity, SmallObject target, std::vector<WeilPoly> coords) {
    Microcube c;
    c.arity_ = arity;
    c.src_ = SmallObject::cube(arity);
    c.target_obj_ = std::move(target);
    c.coords_ = std::move(coords);
    c.check_shape();
    return c;
  }

  static Microcube into_space(int arity, std::vector<WeilPoly> coords) {
    Microcube c;
    c.arity_ = arity;
    c.src_ = SmallObject::cube(arity);
    c.coords_ = std::move(coords);
    c.check_shape();
    return c;
  }

  // P-valued reading of a polynomial map whose source is a full cube
  static Microcube of_map(const PolyMap& f) {
    if (f.source() != SmallObject::cube(f.source().gens()))
      throw std::invalid_argument("microcube source must be a full cube");
    return into_object(f.source().gens(), f.target(), f.coords());
  }

  int arity() const { return arity_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const SmallObject& source() const { return src_; }
  const std::optional<SmallObject>& target_object() const { return target_obj_; }
  const std::vector<WeilPoly>& coords() const { return coords_; }
  const WeilPoly& coord(int j) const { return coords_[static_cast<std::size_t>(j - 1)]; }

  bool same_shape(const Microcube& o) const {
    return arity_ == o.arity_ && target_obj_ == o.target_obj_ &&
           coords_.size() == o.coords_.size();
  }

  PolyMap as_map() const {
    if (!target_obj_) throw std::logic_error("coordinate-space microcube is not a PolyMap");
    return PolyMap(src_, *target_obj_, coords_);
  }

  // gamma^sigma; the source cube has no relations, so any sigma is legal
  Microcube permuted(const Permutation& sigma) const {
    if (sigma.size() != arity_) throw std::invalid_argument("permute: arity mismatch");
    Permutation inv = sigma.inverse();
    Microcube out = *this;
    for (auto& c : out.coords_) {
      WeilPoly q(src_);
      for (const auto& [m, v] : c.terms()) {
        Monomial t = Monomial::one();
        for (int k : m.indices()) t = t.united(Monomial::var(inv(k)));
        q.add_term(t, v);
      }
      c = std::move(q);
    }
    return out;
  }

  // value at d = 0 (the base point for coordinate-space targets)
  std::vector<Rational> basepoint() const {
    std::vector<Rational> out;
    for (const auto& c : coords_) out.push_back(c.coeff(Monomial::one()));
    return out;
  }

  // arity-1 coordinate-space microcube as a tangent vector
  TangentVector as_tangent() const {
    if (arity_ != 1 || target_obj_)
      throw std::logic_error("as_tangent: needs arity 1 over Q^m");
    TangentVector t;
    for (const auto& c : coords_) {
      t.base.push_back(c.coeff(Monomial::one()));
      t.linear.push_back(c.coeff(Monomial::var(1)));
    }
    return t;
  }

  friend bool operator==(const Microcube& a, const Microcube& b) {
    return a.arity_ == b.arity_ && a.target_obj_ == b.target_obj_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Microcube& a, const Microcube& b) { return !(a == b); }

 private:
  void check_shape() const {
    if (target_obj_ && static_cast<int>(coords_.size()) != target_obj_->gens())
      throw std::invalid_argument("coordinate count must match target");
    for (const auto& c : coords_)
      if (c.object() != src_) throw std::invalid_argument("coordinate on wrong source");
  }

  int arity_ = 0;
  SmallObject src_;
  std::optional<SmallObject> target_obj_;
  std::vector<WeilPoly> coords_;
};

}  // namespace sdg
