#pragma once

// Invertibility witnesses over F_p((t)): for each small prime p and each
// balanced q-integer i_{q^2}, the t-adic valuation and leading coefficient of
// its expansion at q = 1 + t reduced mod p. Finiteness of every valuation is
// the computational content of the claim that the denominator set of the
// coefficient ring meets no rational prime. Alongside: the t = 0 fiber check
// (the specialized multiplication table is the group table) and a faithfulness
// check of the algebra acting on tensor space.

#include <string>
#include <utility>
#include <vector>

#include "qhecke/rational.hpp"

namespace qhecke {

struct ValuationRow {
    long prime = 0;
    int i = 0;
    int valuation = 0;
    long leading_coeff = 0;  // in 1..prime-1
};

struct ValuationReport {
    int n = 0;
    std::vector<ValuationRow> rows;  // ordered by (prime, i)
    bool no_rational_prime = false;  // true when every valuation came out finite
};

// Valuation and leading coefficient of i_{(1+t)^2} mod prime. Truncation
// starts at 4i terms and doubles while identically zero, hard-capped at 2*i*p;
// hitting the cap contradicts the finiteness theorem and raises logic_error.
std::pair<int, long> valuation_row(int i, long prime);

// One row per (prime <= n or listed prime, 2 <= i <= n).
ValuationReport df_report(int n, const std::vector<long>& primes = {});

// CSV with a header, one data row per entry, and a trailing summary line.
std::string report_csv(const ValuationReport& report);

// True when the full T-basis multiplication table of degree n, specialized at
// q = 1, coincides with the group multiplication table.
bool deformation_fiber_check(int n);

// True when T-basis products agree with composed word operators on all of
// tensor space (d = n) for every generator pair and a fixed sample of random
// pairs, and the word operators are linearly independent at q = q0.
bool faithfulness_check(int n, const Rational& q0);

}  // namespace qhecke
