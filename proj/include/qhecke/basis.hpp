#pragma once

// Canonical orthogonal bases of the spaces V(p;0): the intersection of the
// kernels of all lowering operators X_i inside the multidegree-p component of
// tensor space. Built one box at a time by the raising-operator recursion, the
// basis is indexed by standard tableaux, is orthogonal with unit norms, and
// carries an irreducible matrix realization of the braid generators.

#include <map>
#include <vector>

#include "qhecke/linalg.hpp"
#include "qhecke/tableau.hpp"
#include "qhecke/tensor_vector.hpp"

namespace qhecke {

struct BasisEntry {
    StandardTableau tableau;
    TensorVector vector;
};

// The recursively defined raising operator at row r and depth i, with the
// bracket arguments n_{r-j} - n_r + j read off the TARGET partition p:
//   Phat_0 = 1,  Phat_1 = Y_{r-1},
//   Phat_i = (n_{r-i+1}-n_r+i)_{q^2} Y_{r-i} Phat_{i-1}
//            - q (n_{r-i+1}-n_r+i-1)_{q^2} Phat_{i-1} Y_{r-i}.
// Requires 0 <= i <= r-1.
TensorVector phat_apply(const Partition& p, int r, int i, const TensorVector& v);

// The normalized operator
//   P_i = (-1)^i q^{-i} [(n_{r-1}-n_r+1)_{q^2} ... (n_{r-i}-n_r+i)_{q^2}]^{-1} Phat_i.
// For a non-increasing target the brackets are all nonzero; a vanishing
// bracket (possible only for a degenerate target) yields the zero vector.
TensorVector p_i_apply(const Partition& p, int r, int i, const TensorVector& v);

// The single-box morphism x_r P_0 + x_{r-1} P_1 + ... + x_1 P_{r-1} adding one
// box in row r; maps V(p_from;0) into V(p_to;0). The two-partition form
// requires p_to = p_from + e_r. The row form computes the target itself and
// returns zero when that target is not non-increasing (the degenerate case,
// where a normalizing bracket vanishes).
TensorVector p_morphism_apply(const Partition& p_from, const Partition& p_to,
                              const TensorVector& v);
TensorVector p_morphism_apply(const Partition& p_from, int r, const TensorVector& v);

// One basis vector per generating sequence / standard tableau of shape p,
// built by folding single-box morphisms from the empty word; sorted by the
// row-reading word of the tableau.
std::vector<BasisEntry> build_basis(const Partition& p);

std::vector<RingElem> norms(const std::vector<BasisEntry>& basis);
std::vector<RingElem> norms(const Partition& p);
// True when every norm is a unit in the coefficient ring for this n.
bool all_unit(const Partition& p, int n);

// Dimension of the joint kernel of all X_i on the multidegree-p component,
// computed by exact elimination at q = q0: an independent check of the basis
// rank. Requires q0 nonzero and not a root of the balanced q-factorial of n.
int kernel_dimension_oracle(const Partition& p, const Rational& q0);

// Matrix of each braid generator on the canonical basis: column t of
// rep_matrices(p)[i] holds the coefficients of Rbar_i v_T in the basis.
// Exactness of the expansion is verified; failure means the span is not
// invariant and raises logic_error.
std::map<int, RingMatrix> rep_matrices(const Partition& p);

// Matrices for every T_w, w in the order of Permutation::all(n), obtained by
// folding generator matrices along reduced words. Sound at any specialization
// satisfying the braid and quadratic relations.
std::vector<QMatrix> extend_generators(const std::vector<QMatrix>& gens, int n);

// True when the images of all T_w at q = q0 span the full f x f matrix ring.
bool spans_full_algebra(const Partition& p, const Rational& q0);

// Rank of the joint map w -> (matrices over all partitions of n) at q = q0,
// flattened; equals the sum of squared multiplicities exactly when the joint
// representation is surjective onto the direct sum of matrix rings.
int joint_rep_rank(int n, const Rational& q0);

}  // namespace qhecke
