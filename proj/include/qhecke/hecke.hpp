#pragma once

// The Hecke algebra of the symmetric group over Q(q), in the T_w basis with
// the local rules
//   T_s T_w = T_{sw}                      when length(sw) > length(w),
//   T_s T_w = (q - q^-1) T_w + T_{sw}     when length(sw) < length(w),
// extended to arbitrary products along reduced words. Generator-by-basis
// products are cached per degree behind a mutex. The (q-1)/q normalization of
// the quadratic relation is deliberately not provided.

#include <map>
#include <string>

#include "qhecke/permutation.hpp"
#include "qhecke/rational.hpp"
#include "qhecke/ring_elem.hpp"

namespace qhecke {

class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {}

    static HeckeElement basis(const Permutation& w);  // T_w
    static HeckeElement identity(int n) { return basis(Permutation(n)); }

    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, RingElem>& terms() const { return terms_; }
    RingElem coeff(const Permutation& w) const;

    void add_term(const Permutation& w, const RingElem& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { a += b; return a; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { a -= b; return a; }
    HeckeElement scaled(const RingElem& c) const;

    bool operator==(const HeckeElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int n_;
    std::map<Permutation, RingElem> terms_;
};

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

// Group algebra Q[S_n]: the q = 1 specialization target.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}

    static GroupAlgebraElement basis(const Permutation& w, const Rational& c = Rational(1));
    static GroupAlgebraElement identity(int n) { return basis(Permutation(n)); }

    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    Rational coeff(const Permutation& w) const;

    void add_term(const Permutation& w, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        a += b;
        return a;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        a -= b;
        return a;
    }
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
    GroupAlgebraElement scaled(const Rational& c) const;

    bool operator==(const GroupAlgebraElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

// Coefficient-wise q -> 1 limit; errors if any coefficient has a pole there.
GroupAlgebraElement specialize_q1(const HeckeElement& a);

}  // namespace qhecke
