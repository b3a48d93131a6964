#pragma once

// The q-combinatorics layer: q-integers in q and q^2, the q^2-factorial,
// cyclotomic polynomials, the unit test for the localized coefficient ring,
// and truncated power-series reduction of Laurent polynomials at q = 1 + t
// over a prime field.

#include <string>
#include <vector>

#include "qhecke/laurent.hpp"
#include "qhecke/ring_elem.hpp"

namespace qhecke {

// i_q = (1 - q^i)/(1 - q) and i_{q^2} = (1 - q^{2i})/(1 - q^2), both meaning
// the telescoped sum, valid for any integer i (0 gives 0, negative i gives
// -(q^-k + ... + q^-ki) in the relevant power).
LaurentPoly qnum(long i, bool squared);

// n_{q^2}! = prod_{i=2..n} i_{q^2}, n >= 1 (empty product for n = 1).
LaurentPoly qfactorial(long n);

// d-th cyclotomic polynomial, exact over Z, memoized.
LaurentPoly cyclotomic(long d);

// Indices d >= 3 with d | 2i for some 2 <= i <= n: exactly the cyclotomic
// factors inverted in the coefficient ring Z_{q,n}, ascending.
std::vector<long> unit_divisors(long n);

// Decides membership of e in the unit group of Z_{q,n} =
// Z[q, q^-1, 1/n_{q^2}!]: units are +-q^a times products of integer powers of
// cyclotomic(d), d in unit_divisors(n). Errors on e = 0.
bool is_unit(const RingElem& e, long n);

// Truncated power series over Z/p in t, coefficients in 0..p-1.
class FpSeries {
public:
    FpSeries(long prime, std::size_t precision);

    long prime() const { return p_; }
    std::size_t precision() const { return c_.size(); }
    const std::vector<long>& coeffs() const { return c_; }
    long coeff(std::size_t k) const { return c_.at(k); }
    void set_coeff(std::size_t k, long v);

    bool is_zero() const;
    // Index of the first nonzero coefficient, -1 when zero to precision.
    long valuation() const;
    long leading_coeff() const;  // coefficient at valuation(); requires nonzero

    FpSeries operator*(const FpSeries& o) const;
    FpSeries& operator+=(const FpSeries& o);
    bool operator==(const FpSeries& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::string to_string() const;  // "1 + 2*t + 1*t^2" style, ascending, "0" when zero

private:
    long p_;
    std::vector<long> c_;
};

// Substitutes q = 1 + t into p, reduces coefficients mod prime, truncates at
// the given precision. Negative exponents expand via the geometric series of
// 1/(1 + t). Errors when a coefficient denominator is divisible by prime.
FpSeries substitute_series(const LaurentPoly& p, long prime, std::size_t precision);

}  // namespace qhecke
