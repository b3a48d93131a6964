#pragma once

// Elements of the rational function field Q(q), held as reduced fractions of
// Laurent polynomials. Normal form: the denominator has lowest exponent 0,
// integer coefficients with content 1 and positive leading coefficient, and
// shares no polynomial factor with the numerator. Constants therefore sit as
// numerator over denominator 1, and structural equality coincides with
// mathematical equality (operator== still cross-multiplies).
//
// Text form: "<num>" when the denominator is 1, otherwise "<num> / <den>",
// both halves in the LaurentPoly text form.

#include <ostream>
#include <string>

#include "qhecke/laurent.hpp"
#include "qhecke/rational.hpp"

namespace qhecke {

class RingElem {
public:
    RingElem() : den_(1) {}  // zero
    RingElem(long c) : num_(c), den_(1) {}
    RingElem(int c) : num_(c), den_(1) {}
    RingElem(const Rational& c) : num_(c), den_(1) {}
    RingElem(const LaurentPoly& p) : num_(p), den_(1) {}
    RingElem(LaurentPoly num, LaurentPoly den);

    static RingElem q_power(int e) { return RingElem(LaurentPoly::q_power(e)); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational as_rational() const;  // requires is_constant()

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem& operator/=(const RingElem& o);

    friend RingElem operator+(RingElem a, const RingElem& b) { a += b; return a; }
    friend RingElem operator-(RingElem a, const RingElem& b) { a -= b; return a; }
    friend RingElem operator*(RingElem a, const RingElem& b) { a *= b; return a; }
    friend RingElem operator/(RingElem a, const RingElem& b) { a /= b; return a; }

    RingElem inverse() const;  // error on zero

    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // q := q0 (error when the denominator vanishes there, or q0 = 0 meets a
    // negative exponent).
    Rational evaluate(const Rational& q0) const;

    // Limit q -> 1, computed by expanding numerator and denominator at
    // q = 1 + t and comparing t-adic valuations. Errors on a genuine pole.
    Rational limit_q1() const;

    std::string to_string() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RingElem& e) {
    return os << e.to_string();
}

}  // namespace qhecke
