#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sdg {

// Square-free monomial in generators d_1..d_n, n <= 64, as a bitmask
// (bit i-1 set <=> d_i divides the monomial).
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t mask) : mask_(mask) {}

  static Monomial one() { return Monomial(0); }
  static Monomial var(int i) { return Monomial(bit(i)); }
  static Monomial of(std::initializer_list<int> indices) {
    std::uint64_t m = 0;
    for (int i : indices) m |= bit(i);
    return Monomial(m);
  }

  std::uint64_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool contains(int i) const { return (mask_ & bit(i)) != 0; }
  bool contains_all(Monomial sub) const { return (mask_ & sub.mask_) == sub.mask_; }
  bool disjoint(Monomial o) const { return (mask_ & o.mask_) == 0; }
  Monomial united(Monomial o) const { return Monomial(mask_ | o.mask_); }
  Monomial minus(Monomial o) const { return Monomial(mask_ & ~o.mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m;) {
      int b = std::countr_zero(m);
      out.push_back(b + 1);
      m &= m - 1;
    }
    return out;
  }

  // "1" or e.g. "d1d3d4"
  std::string str() const {
    if (!mask_) return "1";
    std::string s;
    for (int i : indices()) s += "d" + std::to_string(i);
    return s;
  }

  friend bool operator==(Monomial a, Monomial b) { return a.mask_ == b.mask_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.mask_ != b.mask_; }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
  std::uint64_t mask_ = 0;
};

// Graded order, ties broken lexicographically on the sorted index sequence
// ({1,4} before {2,3}).  Total order; used for bases and term maps.
struct GradedLexLess {
  bool operator()(Monomial a, Monomial b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint64_t x = a.mask() ^ b.mask();
    if (!x) return false;
    // first index where they differ belongs to the lex-smaller one
    return (a.mask() >> std::countr_zero(x)) & 1;
  }
};

}  // namespace sdg
