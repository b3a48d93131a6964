#pragma once

// The commuting actions on tensor space V^{(n)}, V = span(x_1..x_d):
//
//  - rbar_apply(i, .) : the flip-composed braid operator at slots (i, i+1).
//    On a word with letters a = w_i, b = w_{i+1}:
//      a = b : multiply by q;   a < b : (q - q^-1) * word + swapped word;
//      a > b : swapped word.
//    These satisfy the braid relations and the quadratic Hecke relation
//    R^2 = (q - q^-1) R + 1, and are symmetric in the word basis.
//
//  - x_apply / y_apply / k_apply / h_apply : the quantized sl_d generators,
//    acting through the coproduct. X lowers one letter i+1 -> i, Y raises
//    one letter i -> i+1, each occurrence weighted by q^(weight of the strict
//    prefix); K scales a word by q^weight, H by q * (weight)_{q^2}.
//
// apply_Tw sends T_w to the composition of rbar factors along any reduced
// word of w; braid invariance makes the choice immaterial. At q = 1 the rbar
// action degenerates to the place permutation (perm_apply).

#include "qhecke/permutation.hpp"
#include "qhecke/tensor_vector.hpp"

namespace qhecke {

TensorVector rbar_apply(int i, const TensorVector& v);

TensorVector x_apply(int i, const TensorVector& v);
TensorVector y_apply(int i, const TensorVector& v);
TensorVector k_apply(int i, const TensorVector& v);
TensorVector kinv_apply(int i, const TensorVector& v);
TensorVector h_apply(int i, const TensorVector& v);

// Classical (q = 1) Casimir for d = 2: (1/2) + (1/2) H0^2 + XY + YX, obtained
// from the quantized operators followed by the q -> 1 specialization. Input
// coefficients must be q-free; eigenvalue on the degree-r primitive component
// is (r + 1)^2 / 2.
TensorVector casimir_classical_apply(const TensorVector& v);

// Quantized Casimir for d = 2:
// (q - q^-1)^-2 (q K + q^-1 K^-1 - 2) + q^-1 K^-1 Y X.
TensorVector casimir_quantized_apply(const TensorVector& v);

// Place permutation: letter at slot j moves to slot sigma(j).
TensorVector perm_apply(const Permutation& sigma, const TensorVector& v);

// T_w as a product of rbar factors along w's reduced word.
TensorVector apply_Tw(const Permutation& w, const TensorVector& v);

}  // namespace qhecke
