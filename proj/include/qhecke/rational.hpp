#pragma once

// Exact rational scalar on top of GMP. Kept canonical at all times:
// gcd(|num|, den) = 1 and den > 0, so structural equality is equality.

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace qhecke {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) { v_ = mpz_class(n); }
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Accepts "a" or "a/b", optional leading '-'.
    explicit Rational(const std::string& s) {
        if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (sgn(v_.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    // Integer exponent; negative exponents invert (error on zero base).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        const Rational base = e > 0 ? *this : inverse();
        const unsigned long m = static_cast<unsigned long>(e > 0 ? e : -e);
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), m);
        mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), m);
        Rational r;
        r.v_ = mpq_class(pn, pd);  // already canonical: base was canonical
        return r;
    }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qhecke
