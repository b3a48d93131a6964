#pragma once

// Vectors in tensor space V^{(n)} with coefficients in Q(q), stored as sparse
// word -> coefficient maps (words kept in lexicographic order by the map).
// The symmetric bilinear form makes the word basis orthonormal.

#include <map>
#include <string>

#include "qhecke/rational.hpp"
#include "qhecke/ring_elem.hpp"
#include "qhecke/word.hpp"

namespace qhecke {

class TensorVector {
public:
    explicit TensorVector(Ambient amb) : amb_(amb) {}

    static TensorVector monomial(Ambient amb, const Word& w, const RingElem& c = RingElem(1));
    // The empty word with coefficient 1 in V^{(0)}: the seed every basis
    // construction grows from.
    static TensorVector unit(int d) { return monomial({0, d}, Word{}); }

    Ambient ambient() const { return amb_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<Word, RingElem>& entries() const { return entries_; }
    RingElem coeff(const Word& w) const;

    void add_term(const Word& w, const RingElem& c);

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { a += b; return a; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { a -= b; return a; }
    TensorVector operator-() const;
    TensorVector scaled(const RingElem& c) const;

    bool operator==(const TensorVector& o) const {
        return amb_ == o.amb_ && entries_ == o.entries_;
    }
    bool operator!=(const TensorVector& o) const { return !(*this == o); }

    // Every coefficient evaluated at q0 (kept as constant RingElems).
    TensorVector evaluate(const Rational& q0) const;
    // Every coefficient replaced by its q -> 1 limit; errors on a pole.
    TensorVector specialize_q1() const;

    std::string to_string() const;

private:
    Ambient amb_;
    std::map<Word, RingElem> entries_;
};

// Orthonormal-basis pairing: sum over shared words of the coefficient
// products. Errors on an ambient mismatch.
RingElem inner_product(const TensorVector& u, const TensorVector& v);

// The same word prefixed with one letter; ambient grows by one slot.
TensorVector prepend_letter(int letter, const TensorVector& v);

}  // namespace qhecke
