#include "sdg/vector_field.hpp"

#include <stdexcept>

namespace sdg {

NilpotentPoint nilpotent_point(const std::vector<Rational>& x0, const SmallObject& obj) {
  NilpotentPoint p;
  p.reserve(x0.size());
  for (const auto& c : x0) p.push_back(WeilPoly::constant(obj, c));
  return p;
}

NilpotentPoint flow_apply(const VectorField& X, int k, const NilpotentPoint& p) {
  if (static_cast<int>(p.size()) != X.m)
    throw std::invalid_argument("flow_apply: dimension mismatch");
  const SmallObject& obj = p.empty() ? SmallObject() : p[0].object();
  if (k < 1 || k > obj.gens())
    throw std::invalid_argument("flow_apply: generator index out of range");
  WeilPoly dk = WeilPoly::var(obj, k);
  NilpotentPoint out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out.push_back(p[i] + dk * X.comps[i].eval(p));
  return out;
}

Microcube star_compose(const std::vector<VectorField>& fields,
                       const std::vector<Rational>& x0) {
  int n = static_cast<int>(fields.size());
  int m = fields.empty() ? static_cast<int>(x0.size()) : fields[0].m;
  for (const auto& f : fields)
    if (f.m != m) throw std::invalid_argument("star_compose: dimension mismatch");
  SmallObject cube = SmallObject::cube(n);
  NilpotentPoint p = nilpotent_point(x0, cube);
  for (int i = 1; i <= n; ++i) p = flow_apply(fields[static_cast<std::size_t>(i - 1)], i, p);
  return Microcube::into_space(n, std::move(p));
}

Microcube gamma_word(const std::vector<VectorField>& fields,
                     const std::vector<int>& word, const std::vector<Rational>& x0) {
  std::vector<VectorField> ordered;
  ordered.reserve(word.size());
  for (int w : word) ordered.push_back(fields[static_cast<std::size_t>(w - 1)]);
  return star_compose(ordered, x0).permuted(Permutation::from_word(word));
}

VectorField classical_bracket(const VectorField& F, const VectorField& G) {
  if (F.m != G.m) throw std::invalid_argument("classical_bracket: dimension mismatch");
  VectorField out = VectorField::zero(F.m);
  for (int i = 0; i < F.m; ++i)
    for (int j = 1; j <= F.m; ++j) {
      out.comps[static_cast<std::size_t>(i)] +=
          G.comps[static_cast<std::size_t>(i)].partial(j) *
              F.comps[static_cast<std::size_t>(j - 1)] -
          F.comps[static_cast<std::size_t>(i)].partial(j) *
              G.comps[static_cast<std::size_t>(j - 1)];
    }
  return out;
}

TangentVector bracket(const VectorField& X1, const VectorField& X2,
                      const std::vector<Rational>& x0) {
  Microcube g12 = gamma_word({X1, X2}, {1, 2}, x0);
  Microcube g21 = gamma_word({X1, X2}, {2, 1}, x0);
  return strong_diff(g12, g21).as_tangent();
}

TangentVector bracket3_term(const std::vector<VectorField>& fields, int a, int b, int c,
                            const std::vector<Rational>& x0) {
  auto g = [&](int p, int q, int r) { return gamma_word(fields, {p, q, r}, x0); };
  Microcube left = strong_diff_sub(g(a, b, c), g(a, c, b), {a});
  Microcube right = strong_diff_sub(g(b, c, a), g(c, b, a), {a});
  return strong_diff(left, right).as_tangent();
}

TangentVector bracket3(const VectorField& X1, const VectorField& X2,
                       const VectorField& X3, const std::vector<Rational>& x0) {
  return bracket3_term({X1, X2, X3}, 1, 2, 3, x0);
}

TangentVector bracket4_term(const std::vector<VectorField>& fields, int a, int b, int c,
                            int d, const std::vector<Rational>& x0) {
  auto g = [&](int p, int q, int r, int s) { return gamma_word(fields, {p, q, r, s}, x0); };
  Microcube i1 = strong_diff_sub(g(a, b, c, d), g(a, b, d, c), {a, b});
  Microcube i2 = strong_diff_sub(g(a, c, d, b), g(a, d, c, b), {a, b});
  Microcube mid1 = strong_diff_sub(i1, i2, {1});
  Microcube i3 = strong_diff_sub(g(b, c, d, a), g(b, d, c, a), {a, b});
  Microcube i4 = strong_diff_sub(g(c, d, b, a), g(d, c, b, a), {a, b});
  Microcube mid2 = strong_diff_sub(i3, i4, {1});
  return strong_diff(mid1, mid2).as_tangent();
}

TangentVector bracket4(const VectorField& X1, const VectorField& X2,
                       const VectorField& X3, const VectorField& X4,
                       const std::vector<Rational>& x0) {
  return bracket4_term({X1, X2, X3, X4}, 1, 2, 3, 4, x0);
}

VectorField random_field(SplitMix64& rng, int m, int degree, int coeff_range) {
  VectorField X = VectorField::zero(m);
  // all exponent vectors of total degree <= degree
  std::vector<Polynomial::Expo> expos;
  Polynomial::Expo cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == m) { expos.push_back(cur); return; }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, remaining - k);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, degree);
  for (int i = 0; i < m; ++i)
    for (const auto& e : expos)
      X.comps[static_cast<std::size_t>(i)].add_term(
          e, rat(rng.next_int(-coeff_range, coeff_range)));
  return X;
}

std::vector<Rational> random_point(SplitMix64& rng, int m, int coeff_range) {
  std::vector<Rational> x0;
  for (int i = 0; i < m; ++i) x0.push_back(rat(rng.next_int(-coeff_range, coeff_range)));
  return x0;
}

}  // namespace sdg
