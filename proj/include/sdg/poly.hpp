#pragma once

#include "sdg/rational.hpp"
#include "sdg/weil_poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdg {

// Polynomial in x_1..x_m with rational coefficients; exponent vectors are the
// keys.  Only what the flow model needs: ring ops, partials, and evaluation
// at nilpotent-displaced points.
class Polynomial {
 public:
  using Expo = std::vector<int>;
  using Terms = std::map<Expo, Rational>;

  explicit Polynomial(int m = 0) : m_(m) {}

  static Polynomial constant(int m, Rational c) {
    Polynomial p(m);
    p.add_term(Expo(static_cast<std::size_t>(m), 0), std::move(c));
    return p;
  }
  static Polynomial var(int m, int i) {
    Polynomial p(m);
    Expo e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  int vars() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      if (d > deg) deg = d;
    }
    return deg;
  }

  void add_term(Expo e, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.m_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e = ea;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial out(m_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
  }

  Polynomial partial(int i) const {
    Polynomial out(m_);
    for (const auto& [e, c] : terms_) {
      int k = e[static_cast<std::size_t>(i - 1)];
      if (k == 0) continue;
      Expo d = e;
      --d[static_cast<std::size_t>(i - 1)];
      out.add_term(std::move(d), c * k);
    }
    return out;
  }

  // substitution x_i := args[i-1] into a Weil algebra (finite because the
  // displacements are nilpotent)
  WeilPoly eval(const std::vector<WeilPoly>& args) const {
    if (static_cast<int>(args.size()) != m_)
      throw std::invalid_argument("eval: argument count mismatch");
    const SmallObject& obj = args.empty() ? SmallObject() : args[0].object();
    WeilPoly out = WeilPoly::zero(obj);
    for (const auto& [e, c] : terms_) {
      WeilPoly t = WeilPoly::constant(obj, c);
      for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
        for (int k = 0; k < e[i] && !t.is_zero(); ++k) t = t * args[i];
      out += t;
    }
    return out;
  }

  Rational eval_rational(const std::vector<Rational>& x) const {
    Rational out(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      out += t;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check(const Polynomial& o) const {
    if (m_ != o.m_) throw std::invalid_argument("polynomial variable-count mismatch");
  }

  int m_;
  Terms terms_;
};

}  // namespace sdg
