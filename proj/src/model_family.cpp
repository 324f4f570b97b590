#include "sdg/model_family.hpp"

#include "sdg/strong_diff.hpp"
#include "sdg/universal.hpp"

#include <stdexcept>

namespace sdg {

HypothesisSystem::HypothesisSystem() {
  SmallObject cube = SmallObject::cube(4);
  d4_basis_ = cube.basis();
  for (std::size_t t = 0; t < d4_basis_.size(); ++t)
    mono_index_[d4_basis_[t].mask()] = static_cast<int>(t);

  std::vector<SparseRow> rows;
  for (const auto& e : universal_edges()) {
    int pu = (word_rank(e.u) - 1) * 16;
    int pv = (word_rank(e.v) - 1) * 16;
    SmallObject r = edge_object(e.pair);
    for (std::size_t t = 0; t < d4_basis_.size(); ++t) {
      if (!r.admissible(d4_basis_[t])) continue;  // killed slots are unconstrained
      SparseRow row;
      row[pu + static_cast<int>(t)] = 1;
      row[pv + static_cast<int>(t)] = -1;
      rows.push_back(std::move(row));
    }
  }
  reduction_ = std::make_unique<RowReduction>(std::move(rows), stacked_dim());
}

int HypothesisSystem::slot(const std::string& word, Monomial m) const {
  return (word_rank(word) - 1) * 16 + mono_index_.at(m.mask());
}

std::vector<Rational> HypothesisSystem::sample(SplitMix64& rng, int coeff_range) const {
  std::vector<Rational> free_vals;
  free_vals.reserve(reduction_->free_cols().size());
  for (std::size_t k = 0; k < reduction_->free_cols().size(); ++k)
    free_vals.push_back(rat(rng.next_int(-coeff_range, coeff_range)));
  return reduction_->complete_from_free(free_vals);
}

namespace {

const HypothesisSystem& hypothesis_system() {
  static const HypothesisSystem sys;
  return sys;
}

}  // namespace

ModelFamily random_compatible_family(std::uint64_t seed, int m, int coeff_range) {
  const auto& sys = hypothesis_system();
  SmallObject cube = SmallObject::cube(4);
  std::vector<Monomial> basis = cube.basis();

  SplitMix64 rng(seed);
  std::vector<std::vector<Rational>> per_component;
  for (int comp = 0; comp < m; ++comp) {
    SplitMix64 stream = rng.split(static_cast<std::uint64_t>(comp) + 1);
    per_component.push_back(sys.sample(stream, coeff_range));
  }

  ModelFamily fam;
  fam.seed = seed;
  fam.m = m;
  for (const std::string& w : injection_words()) {
    std::vector<WeilPoly> coords;
    for (int comp = 0; comp < m; ++comp) {
      WeilPoly p(cube);
      for (const auto& mono : basis)
        p.add_term(mono, per_component[static_cast<std::size_t>(comp)]
                                      [static_cast<std::size_t>(sys.slot(w, mono))]);
      coords.push_back(std::move(p));
    }
    fam.cubes.emplace(w, Microcube::into_space(4, std::move(coords)));
  }
  return fam;
}

ModelFamily universal_family_as_model() {
  ModelFamily fam;
  fam.m = 53;
  for (const auto& inj : build_injections())
    fam.cubes.emplace(inj.word, Microcube::into_space(4, inj.map.coords()));
  return fam;
}

std::optional<HypothesisViolation> family_hypothesis_defect(const ModelFamily& f) {
  for (const auto& e : universal_edges()) {
    SmallObject r = edge_object(e.pair);
    auto [i, j] = r.forbidden_pairs().front();
    if (auto d = agreement_defect(f.cubes.at(e.u), f.cubes.at(e.v), i, j)) {
      std::string restriction = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      return HypothesisViolation{e.u, e.v, restriction, d->describe()};
    }
  }
  return std::nullopt;
}

ModelVerification verify_theorem_3_2_model(const ModelFamily& f) {
  if (auto v = family_hypothesis_defect(f))
    throw std::invalid_argument("family violates gamma" + v->u + "|D4{" + v->pair +
                                "} = gamma" + v->v + ": " + v->detail);
  ModelVerification out;
  for (const auto& label : term_labels()) {
    auto [a, b, c, d] = label;
    TermPieces pieces = compute_term(f.cubes, a, b, c, d);
    out.terms.push_back(pieces.term.as_tangent());
  }
  out.sum = tangent_add(std::span<const TangentVector>(out.terms.data(), out.terms.size()));
  out.zero = out.sum.linear_zero();
  return out;
}

}  // namespace sdg
