#pragma once

// Classical (q = 1) idempotents of the rational group algebra of S_n. The
// joint action on the canonical bases identifies Q[S_n] with a direct sum of
// matrix rings; central and canonical idempotents are recovered by solving the
// resulting n! x n! exact linear system once per degree. Frobenius-Young
// idempotents are built directly from row and column stabilizers for
// comparison.

#include <vector>

#include "qhecke/basis.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/tableau.hpp"

namespace qhecke {

// The q = 1 matrices of every group element on every canonical basis, plus
// the factorization needed to invert the flattening map c -> sum c_sigma
// rho(sigma). Built once, then read-only.
struct RepresentationTable {
    int n = 0;
    std::vector<Permutation> perms;                    // Permutation::all(n) order
    std::vector<Partition> partitions;                 // Partition::all(n, n) order
    std::vector<std::vector<StandardTableau>> tableaux;  // per partition, basis order
    std::vector<std::vector<QMatrix>> rho;             // [partition][perm index]
    QMatrix solve_inverse;                             // inverse of the flattening matrix
};

// Requires 2 <= n <= 5. The flattening matrix is provably invertible (the
// joint representation is bijective onto the sum of matrix rings); a singular
// system raises logic_error.
RepresentationTable rep_table(int n);

// Image of a group algebra element under rho_p.
QMatrix represent(const RepresentationTable& table, std::size_t p_index,
                  const GroupAlgebraElement& a);

// The unique element acting as the identity on the p-block and as zero on
// every other block.
GroupAlgebraElement central_idempotent(const RepresentationTable& table, const Partition& p);

// The unique element acting as the elementary matrix unit at T's diagonal
// position of its shape block and as zero elsewhere: the projection onto the
// canonical basis vector of T.
GroupAlgebraElement canonical_idempotent(const RepresentationTable& table,
                                         const StandardTableau& t);

// (f/n!) * (column antisymmetrizer) * (row symmetrizer) of the tableau.
GroupAlgebraElement frobenius_young_idempotent(const StandardTableau& t, int n);

}  // namespace qhecke
