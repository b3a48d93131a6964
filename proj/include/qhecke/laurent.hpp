#pragma once

// Laurent polynomials over Q in one variable q: sparse exponent -> coefficient
// maps with exact rational coefficients. Exponents may be negative.
//
// Text form (pinned, used by every consumer): terms in descending exponent
// order, each rendered "c*q^e" (just "c" for e = 0, "c*q" for e = 1, the
// rational coefficient always printed, its "/b" part omitted when b = 1),
// joined by " + " / " - "; a leading negative term carries a "-" prefix; the
// zero polynomial is "0".

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "qhecke/rational.hpp"

namespace qhecke {

class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly q_power(int e) { return term(Rational(1), e); }
    static LaurentPoly term(const Rational& c, int e) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_coeff().is_one(); }

    // Highest / lowest exponent; both require a nonzero polynomial.
    int degree() const;
    int low() const;
    int width() const { return degree() - low(); }

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int e) const;
    Rational leading() const;  // coefficient at degree()
    Rational constant_coeff() const { return coeff(0); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(int k) const;  // multiply by q^k

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // q := q0. Requires q0 != 0 whenever a negative exponent is present.
    Rational evaluate(const Rational& q0) const;

    // Exact division in Q[q, q^-1]: returns false (quo untouched) unless b
    // divides a exactly. b must be nonzero.
    static bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo);

    // Gcd up to units of Q[q, q^-1], returned in the fixed normal form:
    // lowest exponent 0, integer coefficients with content 1, positive
    // leading coefficient. gcd(0, 0) = 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    // Writes *this = content * prim where prim has integer coefficients,
    // content 1 and positive leading coefficient (exponent support kept).
    // Requires nonzero.
    std::pair<Rational, LaurentPoly> primitive_parts() const;

    std::string to_string() const;

private:
    std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

}  // namespace qhecke
