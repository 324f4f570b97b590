#pragma once

#include "sdg/microcube.hpp"
#include "sdg/poly.hpp"
#include "sdg/splitmix64.hpp"
#include "sdg/strong_diff.hpp"

#include <vector>

namespace sdg {

// Polynomial vector field on Q^m.  Its flow under a nilpotent time d is the
// exact map x |-> x + d*F(x) (d^2 = 0 truncates the Taylor series).
struct VectorField {
  int m = 0;
  std::vector<Polynomial> comps;

  static VectorField zero(int m) {
    return {m, std::vector<Polynomial>(static_cast<std::size_t>(m), Polynomial(m))};
  }
};

// point of Q^m displaced by nilpotent amounts: one Weil-algebra element per
// coordinate, constant part = the base point
using NilpotentPoint = std::vector<WeilPoly>;

NilpotentPoint nilpotent_point(const std::vector<Rational>& x0, const SmallObject& obj);

// p |-> p + d_k * F(p)
NilpotentPoint flow_apply(const VectorField& X, int k, const NilpotentPoint& p);

// (d_1..d_n) |-> flows of fields[0],..,fields[n-1] applied in that order,
// fields[i] with time d_{i+1}; the paper's X_n * ... * X_1 is
// star_compose({X_1,..,X_n}).
Microcube star_compose(const std::vector<VectorField>& fields,
                       const std::vector<Rational>& x0);

// gamma_w = (X_{w(n)} * .. * X_{w(1)})^{sigma_w}: field X_{w(i)} flows i-th,
// with its own time d_{w(i)}
Microcube gamma_word(const std::vector<VectorField>& fields,
                     const std::vector<int>& word, const std::vector<Rational>& x0);

// (JG)F - (JF)G, the classical Lie bracket; the independent oracle
VectorField classical_bracket(const VectorField& F, const VectorField& G);

TangentVector bracket(const VectorField& X1, const VectorField& X2,
                      const std::vector<Rational>& x0);
TangentVector bracket3(const VectorField& X1, const VectorField& X2,
                       const VectorField& X3, const std::vector<Rational>& x0);
TangentVector bracket4(const VectorField& X1, const VectorField& X2,
                       const VectorField& X3, const VectorField& X4,
                       const std::vector<Rational>& x0);

// [X_a,[X_b,X_c]] / [X_a,[X_b,[X_c,X_d]]] for arbitrary labels
TangentVector bracket3_term(const std::vector<VectorField>& fields, int a, int b, int c,
                            const std::vector<Rational>& x0);
TangentVector bracket4_term(const std::vector<VectorField>& fields, int a, int b, int c,
                            int d, const std::vector<Rational>& x0);

VectorField random_field(SplitMix64& rng, int m, int degree, int coeff_range);
std::vector<Rational> random_point(SplitMix64& rng, int m, int coeff_range);

}  // namespace sdg
