#pragma once

#include "sdg/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sdg {

using SparseRow = std::map<int, Rational>;  // column -> value

// Reduced row echelon form over Q with deterministic pivoting: columns are
// visited in index order, the pivot is the first not-yet-used row with a
// nonzero entry.  Rows keep their identity (no swaps) and every elementary
// operation is logged so the same reduction can be replayed on right-hand
// sides without re-eliminating.
class RowReduction {
 public:
  struct Scale { int row; Rational factor; };
  struct Axpy { int target, src; Rational factor; };  // row[target] += factor*row[src]

  explicit RowReduction(std::vector<SparseRow> rows, int ncols)
      : rows_(std::move(rows)), ncols_(ncols),
        pivot_row_of_col_(static_cast<std::size_t>(ncols), -1) {
    std::vector<bool> used(rows_.size(), false);
    for (int c = 0; c < ncols_; ++c) {
      int piv = -1;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (used[r]) continue;
        auto it = rows_[r].find(c);
        if (it != rows_[r].end() && it->second != 0) { piv = static_cast<int>(r); break; }
      }
      if (piv < 0) { free_cols_.push_back(c); continue; }
      used[static_cast<std::size_t>(piv)] = true;
      pivot_row_of_col_[static_cast<std::size_t>(c)] = piv;
      pivot_cols_.push_back(c);

      Rational v = rows_[static_cast<std::size_t>(piv)][c];
      if (v != 1) {
        Rational inv = Rational(1) / v;
        for (auto& [col, val] : rows_[static_cast<std::size_t>(piv)]) val *= inv;
        scales_.push_back({piv, inv});
        opkind_.push_back(OpKind::kScale);
      }
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(r) == piv) continue;
        auto it = rows_[r].find(c);
        if (it == rows_[r].end() || it->second == 0) continue;
        Rational f = -it->second;
        axpy_row(rows_[r], rows_[static_cast<std::size_t>(piv)], f);
        axpys_.push_back({static_cast<int>(r), piv, f});
        opkind_.push_back(OpKind::kAxpy);
      }
    }
  }

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  int cols() const { return ncols_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  const std::vector<int>& free_cols() const { return free_cols_; }
  const std::vector<SparseRow>& reduced_rows() const { return rows_; }
  int pivot_row_of(int col) const { return pivot_row_of_col_[static_cast<std::size_t>(col)]; }

  // replays the reduction on a right-hand side
  void apply(std::vector<Rational>& y) const {
    std::size_t si = 0, ai = 0;
    for (std::size_t k = 0; k < opkind_.size(); ++k) {
      if (opkind_[k] == OpKind::kScale) {
        const Scale& s = scales_[si++];
        y[static_cast<std::size_t>(s.row)] *= s.factor;
      } else {
        const Axpy& a = axpys_[ai++];
        if (y[static_cast<std::size_t>(a.src)] != 0)
          y[static_cast<std::size_t>(a.target)] += a.factor * y[static_cast<std::size_t>(a.src)];
      }
    }
  }

  // Solves (original rows) * x = y for the canonical pivot solution (free
  // coordinates zero).  Returns nullopt plus the offending row index via
  // *bad_row when inconsistent.
  std::optional<std::vector<Rational>> solve(std::vector<Rational> y,
                                             int* bad_row = nullptr) const {
    apply(y);
    std::vector<bool> is_pivot_row(rows_.size(), false);
    for (int c : pivot_cols_)
      is_pivot_row[static_cast<std::size_t>(pivot_row_of(c))] = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!is_pivot_row[r] && y[r] != 0) {
        if (bad_row) *bad_row = static_cast<int>(r);
        return std::nullopt;
      }
    }
    std::vector<Rational> x(static_cast<std::size_t>(ncols_), Rational(0));
    for (int c : pivot_cols_)
      x[static_cast<std::size_t>(c)] = y[static_cast<std::size_t>(pivot_row_of(c))];
    return x;
  }

  // Basis of the null space of the original matrix, one vector per free column.
  std::vector<std::vector<Rational>> kernel_basis() const {
    std::vector<std::vector<Rational>> out;
    for (int cf : free_cols_) {
      std::vector<Rational> k(static_cast<std::size_t>(ncols_), Rational(0));
      k[static_cast<std::size_t>(cf)] = 1;
      for (int c : pivot_cols_) {
        const SparseRow& row = rows_[static_cast<std::size_t>(pivot_row_of(c))];
        auto it = row.find(cf);
        if (it != row.end()) k[static_cast<std::size_t>(c)] = -it->second;
      }
      out.push_back(std::move(k));
    }
    return out;
  }

  // Completes free coordinates to a full solution of (rows)*x = 0: pivot
  // coordinates are determined by the free ones.
  std::vector<Rational> complete_from_free(const std::vector<Rational>& free_vals) const {
    std::vector<Rational> x(static_cast<std::size_t>(ncols_), Rational(0));
    for (std::size_t k = 0; k < free_cols_.size(); ++k)
      x[static_cast<std::size_t>(free_cols_[k])] = free_vals[k];
    for (int c : pivot_cols_) {
      const SparseRow& row = rows_[static_cast<std::size_t>(pivot_row_of(c))];
      Rational v(0);
      for (const auto& [col, val] : row)
        if (col != c && x[static_cast<std::size_t>(col)] != 0)
          v += val * x[static_cast<std::size_t>(col)];
      x[static_cast<std::size_t>(c)] = -v;
    }
    return x;
  }

 private:
  enum class OpKind { kScale, kAxpy };

  static void axpy_row(SparseRow& target, const SparseRow& src, const Rational& f) {
    for (const auto& [col, val] : src) {
      auto it = target.find(col);
      if (it == target.end()) {
        Rational nv = f * val;
        if (nv != 0) target.emplace(col, std::move(nv));
      } else {
        it->second += f * val;
        if (it->second == 0) target.erase(it);
      }
    }
  }

  std::vector<SparseRow> rows_;
  int ncols_;
  std::vector<int> pivot_row_of_col_;
  std::vector<int> pivot_cols_, free_cols_;
  std::vector<Scale> scales_;
  std::vector<Axpy> axpys_;
  std::vector<OpKind> opkind_;  // interleaving of the two op streams
};

}  // namespace sdg
