#pragma once

#include "sdg/exact_linalg.hpp"
#include "sdg/poly_map.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdg {

// Finite cone of small objects: legs map into the apex, edges relate pairs of
// legs through a common source object (f_a o g = f_b o h is checked, not assumed).
struct DiagramLeg {
  SmallObject object;
  PolyMap to_apex;  // object -> apex
};

struct DiagramEdge {
  SmallObject object;  // the edge's source (an R object)
  int a = 0, b = 0;    // leg indices, 0-based
  PolyMap to_a, to_b;  // object -> leg a / leg b
};

struct Diagram {
  SmallObject apex;
  std::vector<DiagramLeg> legs;
  std::vector<DiagramEdge> edges;

  void validate() const {
    for (std::size_t k = 0; k < legs.size(); ++k) {
      const auto& leg = legs[k];
      if (leg.to_apex.source() != leg.object || leg.to_apex.target() != apex)
        throw std::invalid_argument("leg " + std::to_string(k) + ": map shape mismatch");
      if (auto d = leg.to_apex.defect())
        throw std::invalid_argument("leg " + std::to_string(k) + ": " + d->describe());
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& ed = edges[e];
      if (ed.a < 0 || ed.b < 0 || ed.a >= static_cast<int>(legs.size()) ||
          ed.b >= static_cast<int>(legs.size()))
        throw std::invalid_argument("edge " + std::to_string(e) + ": bad leg index");
      if (ed.to_a.source() != ed.object || ed.to_b.source() != ed.object ||
          ed.to_a.target() != legs[static_cast<std::size_t>(ed.a)].object ||
          ed.to_b.target() != legs[static_cast<std::size_t>(ed.b)].object)
        throw std::invalid_argument("edge " + std::to_string(e) + ": map shape mismatch");
      if (auto d = ed.to_a.defect())
        throw std::invalid_argument("edge " + std::to_string(e) + ": " + d->describe());
      if (auto d = ed.to_b.defect())
        throw std::invalid_argument("edge " + std::to_string(e) + ": " + d->describe());
    }
  }

  // index of the first edge whose two routes to the apex disagree, or -1
  int first_noncommuting_edge() const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& ed = edges[e];
      PolyMap via_a = legs[static_cast<std::size_t>(ed.a)].to_apex.after(ed.to_a);
      PolyMap via_b = legs[static_cast<std::size_t>(ed.b)].to_apex.after(ed.to_b);
      if (via_a != via_b) return static_cast<int>(e);
    }
    return -1;
  }
};

struct ColimitReport {
  int apex_dim = 0;
  int compat_dim = 0;
  int kernel_dim = 0;
  int rank = 0;
  bool exists_for_all = false;
  bool unique = false;
  std::vector<WeilPoly> kernel_basis;

  bool quasi_colimit() const { return exists_for_all && unique; }
};

// Linearization of theta |-> (theta o f_leg): everything the checker needs,
// built once per diagram and reused across mediate calls.
class ColimitSolver {
 public:
  explicit ColimitSolver(Diagram d) : diagram_(std::move(d)) {
    diagram_.validate();
    int bad = diagram_.first_noncommuting_edge();
    if (bad >= 0)
      throw std::invalid_argument("edge " + std::to_string(bad) + " does not commute");

    apex_basis_ = diagram_.apex.basis();
    leg_offset_.push_back(0);
    for (const auto& leg : diagram_.legs) {
      leg_bases_.push_back(leg.object.basis());
      leg_offset_.push_back(leg_offset_.back() +
                            static_cast<int>(leg_bases_.back().size()));
    }
    stacked_dim_ = leg_offset_.back();

    // pullback operator: column per apex basis monomial
    op_matrix_.assign(static_cast<std::size_t>(stacked_dim_), {});
    for (std::size_t j = 0; j < apex_basis_.size(); ++j) {
      WeilPoly mono = WeilPoly::term(diagram_.apex, apex_basis_[j], 1);
      for (std::size_t k = 0; k < diagram_.legs.size(); ++k) {
        WeilPoly pb = diagram_.legs[k].to_apex.pullback(mono);
        for (const auto& [m, c] : pb.terms())
          op_matrix_[static_cast<std::size_t>(stacked_index(static_cast<int>(k), m))]
                    [static_cast<int>(j)] = c;
      }
    }
    op_reduction_ = std::make_unique<RowReduction>(op_matrix_,
                                                   static_cast<int>(apex_basis_.size()));

    // compatibility constraints: one row per edge per edge-basis monomial,
    // expressing (theta_a o g) - (theta_b o h) = 0 coefficientwise
    std::vector<SparseRow> c_rows;
    for (const auto& ed : diagram_.edges) {
      std::vector<Monomial> r_basis = ed.object.basis();
      std::map<std::uint64_t, int> r_index;
      for (std::size_t t = 0; t < r_basis.size(); ++t)
        r_index[r_basis[t].mask()] = static_cast<int>(t);
      std::vector<SparseRow> rows(r_basis.size());
      add_edge_terms(rows, r_index, ed.to_a, ed.a, 1);
      add_edge_terms(rows, r_index, ed.to_b, ed.b, -1);
      for (auto& r : rows) c_rows.push_back(std::move(r));
    }
    constraint_reduction_ = std::make_unique<RowReduction>(std::move(c_rows), stacked_dim_);
  }

  const Diagram& diagram() const { return diagram_; }
  const std::vector<Monomial>& apex_basis() const { return apex_basis_; }
  const std::vector<Monomial>& leg_basis(int k) const {
    return leg_bases_[static_cast<std::size_t>(k)];
  }
  int stacked_dim() const { return stacked_dim_; }
  int compat_dim() const { return stacked_dim_ - constraint_reduction_->rank(); }

  // the reduction of the hypothesis system (free slots + completion), used by
  // random compatible-family generators
  const RowReduction& constraint_reduction() const { return *constraint_reduction_; }

  // rows = stacked leg slots, columns = apex basis monomials
  const std::vector<SparseRow>& pullback_matrix() const { return op_matrix_; }
  int stacked_slot(int leg, Monomial m) const { return stacked_index(leg, m); }

  // one family per free direction of the compatible subspace
  std::vector<std::vector<WeilPoly>> compatible_basis() const {
    std::vector<std::vector<WeilPoly>> out;
    for (const auto& vec : constraint_reduction_->kernel_basis())
      out.push_back(unstack_family(vec));
    return out;
  }

  ColimitReport report() const {
    ColimitReport r;
    r.apex_dim = static_cast<int>(apex_basis_.size());
    r.compat_dim = compat_dim();
    r.rank = op_reduction_->rank();
    r.kernel_dim = r.apex_dim - r.rank;
    // image of the pullback operator always lies inside the compatible
    // subspace (edges commute), so equality is a rank condition
    r.exists_for_all = (r.rank == r.compat_dim);
    r.unique = (r.kernel_dim == 0);
    for (const auto& k : op_reduction_->kernel_basis())
      r.kernel_basis.push_back(vector_to_apex_poly(k));
    return r;
  }

  std::vector<Rational> stack_family(const std::vector<WeilPoly>& family) const {
    if (family.size() != diagram_.legs.size())
      throw std::invalid_argument("family size mismatch");
    std::vector<Rational> y(static_cast<std::size_t>(stacked_dim_), Rational(0));
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (family[k].object() != diagram_.legs[k].object)
        throw std::invalid_argument("family member " + std::to_string(k) +
                                    " on wrong object");
      for (const auto& [m, c] : family[k].terms())
        y[static_cast<std::size_t>(stacked_index(static_cast<int>(k), m))] = c;
    }
    return y;
  }

  std::vector<WeilPoly> unstack_family(const std::vector<Rational>& y) const {
    std::vector<WeilPoly> out;
    for (std::size_t k = 0; k < diagram_.legs.size(); ++k) {
      WeilPoly p(diagram_.legs[k].object);
      const auto& basis = leg_bases_[k];
      for (std::size_t t = 0; t < basis.size(); ++t)
        p.add_term(basis[t], y[static_cast<std::size_t>(leg_offset_[k]) + t]);
      out.push_back(std::move(p));
    }
    return out;
  }

  // index of the first edge violated by the family, or -1 if compatible
  int first_violated_edge(const std::vector<WeilPoly>& family) const {
    for (std::size_t e = 0; e < diagram_.edges.size(); ++e) {
      const auto& ed = diagram_.edges[e];
      if (ed.to_a.pullback(family[static_cast<std::size_t>(ed.a)]) !=
          ed.to_b.pullback(family[static_cast<std::size_t>(ed.b)]))
        return static_cast<int>(e);
    }
    return -1;
  }

  struct MediateError {
    enum class Kind { IncompatibleFamily, Unsolvable } kind;
    int edge = -1;      // violated edge (IncompatibleFamily)
    int leg = -1;       // offending leg (Unsolvable)
    Monomial slot;      // offending monomial slot (Unsolvable)
    std::string describe() const {
      if (kind == Kind::IncompatibleFamily)
        return "family violates edge " + std::to_string(edge);
      return "no mediating element: leg " + std::to_string(leg) +
             ", monomial slot " + slot.str();
    }
  };

  // Solves theta o f_leg = family_leg for all legs; canonical pivot solution
  // (kernel coordinates zero) when the kernel is nontrivial.
  std::optional<WeilPoly> try_mediate(const std::vector<WeilPoly>& family,
                                      MediateError& err) const {
    int bad_edge = first_violated_edge(family);
    if (bad_edge >= 0) {
      err = {MediateError::Kind::IncompatibleFamily, bad_edge, -1, Monomial()};
      return std::nullopt;
    }
    int bad_row = -1;
    auto x = op_reduction_->solve(stack_family(family), &bad_row);
    if (!x) {
      auto [leg, slot] = locate(bad_row);
      err = {MediateError::Kind::Unsolvable, -1, leg, slot};
      return std::nullopt;
    }
    return vector_to_apex_poly(*x);
  }

  WeilPoly mediate(const std::vector<WeilPoly>& family) const {
    MediateError err{};
    auto theta = try_mediate(family, err);
    if (!theta) throw std::invalid_argument(err.describe());
    return *theta;
  }

  std::vector<WeilPoly> pullback_family(const WeilPoly& theta) const {
    std::vector<WeilPoly> out;
    for (const auto& leg : diagram_.legs) out.push_back(leg.to_apex.pullback(theta));
    return out;
  }

 private:
  int stacked_index(int leg, Monomial m) const {
    const auto& basis = leg_bases_[static_cast<std::size_t>(leg)];
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (basis[t] == m)
        return leg_offset_[static_cast<std::size_t>(leg)] + static_cast<int>(t);
    throw std::logic_error("monomial not in leg basis");
  }

  std::pair<int, Monomial> locate(int stacked) const {
    for (std::size_t k = 0; k < diagram_.legs.size(); ++k)
      if (stacked < leg_offset_[k + 1])
        return {static_cast<int>(k),
                leg_bases_[k][static_cast<std::size_t>(stacked - leg_offset_[k])]};
    return {-1, Monomial()};
  }

  WeilPoly vector_to_apex_poly(const std::vector<Rational>& x) const {
    WeilPoly p(diagram_.apex);
    for (std::size_t j = 0; j < apex_basis_.size(); ++j) p.add_term(apex_basis_[j], x[j]);
    return p;
  }

  Diagram diagram_;
  std::vector<Monomial> apex_basis_;
  std::vector<std::vector<Monomial>> leg_bases_;
  std::vector<int> leg_offset_;
  int stacked_dim_ = 0;
  std::vector<SparseRow> op_matrix_;
  std::unique_ptr<RowReduction> op_reduction_;
  std::unique_ptr<RowReduction> constraint_reduction_;

  void add_edge_terms(std::vector<SparseRow>& rows, std::map<std::uint64_t, int>& r_index,
                      const PolyMap& map, int leg, int sign) {
    const auto& basis = leg_bases_[static_cast<std::size_t>(leg)];
    for (std::size_t t = 0; t < basis.size(); ++t) {
      WeilPoly pb = map.pullback(WeilPoly::term(map.target(), basis[t], 1));
      for (const auto& [m, c] : pb.terms())
        rows[static_cast<std::size_t>(r_index.at(m.mask()))]
            [leg_offset_[static_cast<std::size_t>(leg)] + static_cast<int>(t)] += sign * c;
    }
  }
};

// convenience wrappers matching the per-operation surface
inline int compatibility_dim(const Diagram& d) { return ColimitSolver(d).compat_dim(); }
inline ColimitReport check_quasi_colimit(const Diagram& d) { return ColimitSolver(d).report(); }

}  // namespace sdg
