#pragma once

#include "sdg/monomial.hpp"
#include "sdg/rational.hpp"
#include "sdg/small_object.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace sdg {

// Element of the function algebra of a small object: sparse rational
// combination of admissible square-free monomials, kept in canonical form
// (no zero coefficients, no inadmissible terms).
class WeilPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;

  WeilPoly() = default;
  explicit WeilPoly(SmallObject obj) : obj_(std::move(obj)) {}

  static WeilPoly zero(const SmallObject& obj) { return WeilPoly(obj); }
  static WeilPoly constant(const SmallObject& obj, Rational c) {
    WeilPoly p(obj);
    p.add_term(Monomial::one(), std::move(c));
    return p;
  }
  static WeilPoly var(const SmallObject& obj, int i) {
    WeilPoly p(obj);
    p.add_term(Monomial::var(i), 1);
    return p;
  }
  static WeilPoly term(const SmallObject& obj, Monomial m, Rational c) {
    WeilPoly p(obj);
    p.add_term(m, std::move(c));
    return p;
  }

  const SmallObject& object() const { return obj_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // adds c*m, reducing by the object's relations (inadmissible monomials die)
  void add_term(Monomial m, Rational c) {
    if (c == 0 || !obj_.admissible(m)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  WeilPoly& operator+=(const WeilPoly& o) {
    require_same_object(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeilPoly& operator-=(const WeilPoly& o) {
    require_same_object(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend WeilPoly operator+(WeilPoly a, const WeilPoly& b) { return a += b; }
  friend WeilPoly operator-(WeilPoly a, const WeilPoly& b) { return a -= b; }

  friend WeilPoly operator*(const WeilPoly& a, const WeilPoly& b) {
    a.require_same_object(b);
    WeilPoly out(a.obj_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if (!ma.disjoint(mb)) continue;  // d_i^2 = 0
        out.add_term(ma.united(mb), ca * cb);
      }
    return out;
  }

  WeilPoly scaled(const Rational& c) const {
    WeilPoly out(obj_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
  }
  WeilPoly negated() const { return scaled(-1); }

  // image under the canonical injection into a strengthening of the object
  WeilPoly restricted(const SmallObject& sub) const {
    if (!sub.strengthens(obj_))
      throw std::invalid_argument("restrict: not a strengthening of the source object");
    WeilPoly out(sub);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.str();
      if (!first && cs.front() != '-') s += "+";
      if (m.degree() == 0) s += cs;
      else if (c == 1) s += m.str();
      else if (c == -1) s += "-" + m.str();
      else s += cs + "*" + m.str();
      first = false;
    }
    return s;
  }

  friend bool operator==(const WeilPoly& a, const WeilPoly& b) {
    return a.obj_ == b.obj_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeilPoly& a, const WeilPoly& b) { return !(a == b); }

 private:
  void require_same_object(const WeilPoly& o) const {
    if (obj_ != o.obj_) throw std::invalid_argument("WeilPoly object mismatch");
  }

  SmallObject obj_;
  Terms terms_;
};

}  // namespace sdg
