#pragma once

// JSON emission for the CLI artifacts. All output is deterministic: keys keep
// insertion order, terms follow the underlying sorted maps, and numbers are
// emitted as exact coefficient strings.

#include <string>

#include "qhecke/basis.hpp"
#include "qhecke/tensor_vector.hpp"

namespace qhecke {

// How coefficients are specialized before printing.
struct QSpec {
    enum class Mode { symbolic, classical, rational } mode = Mode::symbolic;
    Rational value{0};  // used only in rational mode

    static QSpec symbolic() { return {Mode::symbolic, Rational(0)}; }
    static QSpec classical() { return {Mode::classical, Rational(0)}; }
    static QSpec at(const Rational& q0) { return {Mode::rational, q0}; }
};

// [{"word": [...], "coeff": "..."}], words in lexicographic order.
std::string tensor_vector_json(const TensorVector& v);

// {"partition": [...], "tableaux": [...], "vectors": [...], "norms": [...],
//  "all_units": bool} for the canonical basis of p, specialized per q.
std::string basis_json(const Partition& p, const QSpec& q);

// All three idempotent families at degree n, each element as a list of
// {"perm": one-line, "coeff": "a/b"} sorted by permutation.
std::string idempotents_json(int n);

}  // namespace qhecke
