#include "sdg/identities.hpp"

#include "sdg/exact_linalg.hpp"
#include "sdg/replay.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>

namespace sdg {

namespace {

const std::array<std::array<int, 3>, 6>& sextuple_words() {
  static const std::array<std::array<int, 3>, 6> words = {{
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  return words;
}

// stacked 6x8 hypothesis system for the three-dimensional identity
const RowReduction& sextuple_reduction() {
  static const std::unique_ptr<RowReduction> red = [] {
    SmallObject cube = SmallObject::cube(3);
    std::vector<Monomial> basis = cube.basis();
    std::map<std::uint64_t, int> idx;
    for (std::size_t t = 0; t < basis.size(); ++t) idx[basis[t].mask()] = static_cast<int>(t);
    auto word_index = [&](std::array<int, 3> w) {
      const auto& words = sextuple_words();
      for (std::size_t k = 0; k < words.size(); ++k)
        if (words[k] == w) return static_cast<int>(k);
      throw std::logic_error("unknown word");
    };
    struct Hyp { std::array<int, 3> u, v; int i, j; };
    const std::vector<Hyp> hyps = {
        {{1, 2, 3}, {1, 3, 2}, 2, 3}, {{2, 3, 1}, {3, 2, 1}, 2, 3},
        {{2, 3, 1}, {2, 1, 3}, 1, 3}, {{3, 1, 2}, {1, 3, 2}, 1, 3},
        {{3, 1, 2}, {3, 2, 1}, 1, 2}, {{1, 2, 3}, {2, 1, 3}, 1, 2}};
    std::vector<SparseRow> rows;
    for (const auto& h : hyps) {
      int pu = word_index(h.u) * 8, pv = word_index(h.v) * 8;
      for (const auto& mono : basis) {
        if (mono.contains(h.i) && mono.contains(h.j)) continue;
        SparseRow row;
        row[pu + idx[mono.mask()]] = 1;
        row[pv + idx[mono.mask()]] = -1;
        rows.push_back(std::move(row));
      }
    }
    return std::make_unique<RowReduction>(std::move(rows), 48);
  }();
  return *red;
}

std::vector<VectorField> random_fields(SplitMix64& rng, int count, int m, int degree,
                                       int coeff_range) {
  std::vector<VectorField> out;
  for (int k = 0; k < count; ++k) out.push_back(random_field(rng, m, degree, coeff_range));
  return out;
}

}  // namespace

std::pair<Microcube, Microcube> random_compatible_microsquares(SplitMix64& rng, int m,
                                                               int coeff_range) {
  SmallObject cube = SmallObject::cube(2);
  std::vector<Monomial> basis = cube.basis();
  std::vector<WeilPoly> c1, c2;
  for (int comp = 0; comp < m; ++comp) {
    WeilPoly p1(cube), p2(cube);
    for (const auto& mono : basis) {
      Rational shared = rat(rng.next_int(-coeff_range, coeff_range));
      p1.add_term(mono, shared);
      p2.add_term(mono, mono == Monomial::of({1, 2})
                            ? rat(rng.next_int(-coeff_range, coeff_range))
                            : shared);
    }
    c1.push_back(std::move(p1));
    c2.push_back(std::move(p2));
  }
  return {Microcube::into_space(2, std::move(c1)), Microcube::into_space(2, std::move(c2))};
}

std::vector<Microcube> random_compatible_sextuple(SplitMix64& rng, int m,
                                                  int coeff_range) {
  const RowReduction& red = sextuple_reduction();
  SmallObject cube = SmallObject::cube(3);
  std::vector<Monomial> basis = cube.basis();

  std::vector<std::vector<Rational>> per_component;
  for (int comp = 0; comp < m; ++comp) {
    std::vector<Rational> free_vals;
    for (std::size_t k = 0; k < red.free_cols().size(); ++k)
      free_vals.push_back(rat(rng.next_int(-coeff_range, coeff_range)));
    per_component.push_back(red.complete_from_free(free_vals));
  }

  std::vector<Microcube> out;
  for (std::size_t w = 0; w < sextuple_words().size(); ++w) {
    std::vector<WeilPoly> coords;
    for (int comp = 0; comp < m; ++comp) {
      WeilPoly p(cube);
      for (std::size_t t = 0; t < basis.size(); ++t)
        p.add_term(basis[t],
                   per_component[static_cast<std::size_t>(comp)][w * 8 + t]);
      coords.push_back(std::move(p));
    }
    out.push_back(Microcube::into_space(3, std::move(coords)));
  }
  return out;
}

std::vector<Microcube> random_nestable_octuple(SplitMix64& rng, int m, int coeff_range) {
  static const std::unique_ptr<RowReduction> red = [] {
    SmallObject cube = SmallObject::cube(4);
    std::vector<Monomial> basis = cube.basis();
    std::map<std::uint64_t, int> idx;
    for (std::size_t t = 0; t < basis.size(); ++t) idx[basis[t].mask()] = static_cast<int>(t);

    struct Hyp { int u, v; std::vector<std::pair<int, int>> pairs; };
    std::vector<Hyp> hyps;
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}, {7, 8}})
      hyps.push_back({u, v, {{3, 4}}});
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {5, 7}, {6, 8}})
      hyps.push_back({u, v, {{2, 3}, {2, 4}}});
    for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 7}, {4, 8}})
      hyps.push_back({u, v, {{1, 2}, {1, 3}, {1, 4}}});

    std::vector<SparseRow> rows;
    for (const auto& h : hyps) {
      for (const auto& mono : basis) {
        bool killed = false;
        for (auto [i, j] : h.pairs)
          if (mono.contains(i) && mono.contains(j)) { killed = true; break; }
        if (killed) continue;
        SparseRow row;
        row[(h.u - 1) * 16 + idx[mono.mask()]] = 1;
        row[(h.v - 1) * 16 + idx[mono.mask()]] = -1;
        rows.push_back(std::move(row));
      }
    }
    return std::make_unique<RowReduction>(std::move(rows), 8 * 16);
  }();

  SmallObject cube = SmallObject::cube(4);
  std::vector<Monomial> basis = cube.basis();
  std::vector<std::vector<Rational>> per_component;
  for (int comp = 0; comp < m; ++comp) {
    std::vector<Rational> free_vals;
    for (std::size_t k = 0; k < red->free_cols().size(); ++k)
      free_vals.push_back(rat(rng.next_int(-coeff_range, coeff_range)));
    per_component.push_back(red->complete_from_free(free_vals));
  }

  std::vector<Microcube> out;
  for (int g = 0; g < 8; ++g) {
    std::vector<WeilPoly> coords;
    for (int comp = 0; comp < m; ++comp) {
      WeilPoly p(cube);
      for (std::size_t t = 0; t < basis.size(); ++t)
        p.add_term(basis[t], per_component[static_cast<std::size_t>(comp)]
                                          [static_cast<std::size_t>(g * 16) + t]);
      coords.push_back(std::move(p));
    }
    out.push_back(Microcube::into_space(4, std::move(coords)));
  }
  return out;
}

IdentityRun verify_identity(const std::string& identity, std::uint64_t seed, int trials,
                            int m, int degree, int coeff_range) {
  IdentityRun run;
  run.identity = identity;
  run.trials = trials;
  SplitMix64 rng(seed);

  auto record = [&](int trial, bool ok) {
    if (!ok) {
      ++run.failures;
      if (run.first_failing_trial < 0) run.first_failing_trial = trial;
    }
  };

  for (int t = 0; t < trials; ++t) {
    SplitMix64 stream = rng.split(static_cast<std::uint64_t>(t) + 1);
    if (identity == "1.1") {
      auto fs = random_fields(stream, 2, m, degree, coeff_range);
      auto x0 = random_point(stream, m, coeff_range);
      TangentVector s = tangent_add(bracket(fs[0], fs[1], x0), bracket(fs[1], fs[0], x0));
      record(t, s.linear_zero());
    } else if (identity == "1.2") {
      auto [g1, g2] = random_compatible_microsquares(stream, m, coeff_range);
      TangentVector s = tangent_add(strong_diff(g1, g2).as_tangent(),
                                    strong_diff(g2, g1).as_tangent());
      record(t, s.linear_zero());
    } else if (identity == "1.3") {
      auto fs = random_fields(stream, 3, m, degree, coeff_range);
      auto x0 = random_point(stream, m, coeff_range);
      TangentVector s = tangent_add(
          tangent_add(bracket3_term(fs, 1, 2, 3, x0), bracket3_term(fs, 2, 3, 1, x0)),
          bracket3_term(fs, 3, 1, 2, x0));
      record(t, s.linear_zero());
    } else if (identity == "1.4") {
      auto gs = random_compatible_sextuple(stream, m, coeff_range);
      auto g = [&](int a, int b, int c) -> const Microcube& {
        const auto& words = sextuple_words();
        for (std::size_t k = 0; k < words.size(); ++k)
          if (words[k] == std::array<int, 3>{a, b, c}) return gs[k];
        throw std::logic_error("unknown word");
      };
      auto term = [&](int a, int b, int c) {
        Microcube left = strong_diff_sub(g(a, b, c), g(a, c, b), {a});
        Microcube right = strong_diff_sub(g(b, c, a), g(c, b, a), {a});
        return strong_diff(left, right).as_tangent();
      };
      TangentVector s = tangent_add(tangent_add(term(1, 2, 3), term(2, 3, 1)),
                                    term(3, 1, 2));
      record(t, s.linear_zero());
    } else if (identity == "1.5") {
      auto fs = random_fields(stream, 4, m, degree, coeff_range);
      auto x0 = random_point(stream, m, coeff_range);
      std::vector<TangentVector> terms;
      for (const auto& [a, b, c, d] : term_labels())
        terms.push_back(bracket4_term(fs, a, b, c, d, x0));
      TangentVector s =
          tangent_add(std::span<const TangentVector>(terms.data(), terms.size()));
      record(t, s.linear_zero());
    } else {
      throw std::invalid_argument("unknown identity " + identity);
    }
  }
  return run;
}

}  // namespace sdg
