#pragma once

#include "sdg/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sdg {

// Infinitesimal object D^n{p, xi}: n square-zero generators, d_i d_j = 0 for
// the listed pairs, d_i = 0 for the listed indices.  Indices are 1-based.
class SmallObject {
 public:
  SmallObject() = default;

  SmallObject(int n, const std::vector<std::pair<int, int>>& forbidden,
              const std::vector<int>& zeroed)
      : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw std::invalid_argument("generator count out of range");
    for (int i : zeroed) {
      check_index(i);
      zeroed_ |= bit(i);
    }
    for (auto [i, j] : forbidden) {
      check_index(i);
      check_index(j);
      if (i == j) throw std::invalid_argument("degenerate pair {i,i}");
      // pairs touching a zeroed index are redundant; normalize them away
      if ((bit(i) | bit(j)) & zeroed_) continue;
      adj_[i - 1] |= bit(j);
      adj_[j - 1] |= bit(i);
    }
  }

  static SmallObject cube(int n) { return SmallObject(n, {}, {}); }
  // D(n) = D^n with all pairs forbidden
  static SmallObject dn(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
    return SmallObject(n, p, {});
  }

  int gens() const { return n_; }
  std::uint64_t zeroed_mask() const { return zeroed_; }
  bool zeroed(int i) const { return (zeroed_ & bit(i)) != 0; }
  bool pair_forbidden(int i, int j) const { return (adj_[i - 1] & bit(j)) != 0; }

  bool admissible(Monomial m) const {
    if (m.mask() >> n_) return false;
    if (m.mask() & zeroed_) return false;
    for (std::uint64_t rest = m.mask(); rest;) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj_[b] & rest) return false;  // adj is symmetric; lower bits already checked
    }
    return true;
  }

  std::vector<std::pair<int, int>> forbidden_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (std::uint64_t m = adj_[i - 1] >> i; m;) {
        int j = i + 1 + std::countr_zero(m);
        m &= m - 1;
        out.emplace_back(i, j);
      }
    return out;
  }

  std::vector<int> zeroed_indices() const { return Monomial(zeroed_).indices(); }

  // All admissible square-free monomials, graded-lex.  The admissible family
  // is downward closed, so depth-first extension enumerates it without waste.
  std::vector<Monomial> basis() const {
    std::vector<Monomial> out;
    out.push_back(Monomial::one());
    std::vector<Monomial> frontier = {Monomial::one()};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (Monomial m : frontier) {
        auto idx = m.indices();
        int start = idx.empty() ? 1 : idx.back() + 1;
        for (int j = start; j <= n_; ++j) {
          if (zeroed(j)) continue;
          bool ok = true;
          for (int i : idx)
            if (pair_forbidden(i, j)) { ok = false; break; }
          if (ok) next.push_back(m.united(Monomial::var(j)));
        }
      }
      for (Monomial m : next) out.push_back(m);
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) {
      return GradedLexLess{}(a, b);
    });
    return out;
  }

  // true if this object is `base` with possibly more relations (legal restrict target)
  bool strengthens(const SmallObject& base) const {
    if (n_ != base.n_) return false;
    if ((base.zeroed_ & ~zeroed_) != 0) return false;
    for (int i = 0; i < n_; ++i) {
      if (bit(i + 1) & zeroed_) continue;  // pairs touching zeroed indices are absorbed
      std::uint64_t needed = base.adj_[i] & ~zeroed_;
      if ((needed & ~adj_[i]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const SmallObject& a, const SmallObject& b) {
    return a.n_ == b.n_ && a.zeroed_ == b.zeroed_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const SmallObject& a, const SmallObject& b) { return !(a == b); }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
  void check_index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  }

  int n_ = 0;
  std::uint64_t zeroed_ = 0;
  std::vector<std::uint64_t> adj_;  // adj_[i-1] = generators forbidden next to i
};

}  // namespace sdg
