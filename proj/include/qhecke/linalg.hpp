#pragma once

// Exact linear algebra in two flavours. Symbolic matrices over Q(q) go
// through fraction-free (Bareiss) elimination on cleared Laurent-polynomial
// rows, picking the pivot of smallest exponent spread to keep intermediate
// entries small; rational matrices use plain Gaussian elimination over Q.

#include <functional>
#include <vector>

#include "qhecke/rational.hpp"
#include "qhecke/ring_elem.hpp"
#include "qhecke/tensor_vector.hpp"
#include "qhecke/word.hpp"

namespace qhecke {

using QMatrix = std::vector<std::vector<Rational>>;
using RingMatrix = std::vector<std::vector<RingElem>>;

// ---- symbolic (Q(q)) ----

std::size_t rank(const RingMatrix& m);

// Basis of the right nullspace {v : m v = 0}, each vector of length cols(m).
// Free variables are set to 1 in turn, pivots back-substituted exactly.
std::vector<std::vector<RingElem>> nullspace(const RingMatrix& m);

RingMatrix ring_identity(std::size_t n);
RingMatrix multiply(const RingMatrix& a, const RingMatrix& b);
QMatrix evaluate(const RingMatrix& m, const Rational& q0);

// ---- rational ----

std::size_t rank(const QMatrix& m);
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
QMatrix q_identity(std::size_t n);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& m);  // errors when singular
std::vector<Rational> apply(const QMatrix& m, const std::vector<Rational>& v);

// ---- operator matrices ----

// Matrix of a linear map in a fixed word basis: column j is op applied to the
// j-th basis monomial. Errors if an image word falls outside the basis.
RingMatrix operator_matrix(const std::function<TensorVector(const TensorVector&)>& op,
                           const std::vector<Word>& basis, Ambient amb);

}  // namespace qhecke
