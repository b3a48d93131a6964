#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhecke/qarith.hpp"
#include "qhecke/laurent.hpp"
#include "qhecke/rational.hpp"
#include "qhecke/ring_elem.hpp"

using namespace qhecke;

namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::q_power(e); }

// Independent oracle for q-integers: exact division of 1 - q^{ki} by 1 - q^k
// in the Laurent ring.
LaurentPoly qnum_oracle(long i, bool squared) {
    const int k = squared ? 2 : 1;
    const LaurentPoly num = LaurentPoly(1) - q_pow(static_cast<int>(k * i));
    const LaurentPoly den = LaurentPoly(1) - q_pow(k);
    LaurentPoly quo;
    REQUIRE(LaurentPoly::try_divide(num, den, quo));
    return quo;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp_d(-3, 3), coeff_d(-4, 4), len_d(0, 3);
    LaurentPoly p;
    const int len = len_d(rng);
    for (int t = 0; t < len; ++t)
        p += LaurentPoly::term(Rational(coeff_d(rng)), exp_d(rng));
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-2, -6) == Rational(1, 3));
    CHECK(Rational(2, -6).to_string() == "-1/3");
    CHECK(Rational("7/2") + Rational("1/2") == Rational(4));
    CHECK(Rational(3, 4).pow(-2) == Rational(16, 9));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational("not a number"), std::invalid_argument);
}

TEST_CASE("laurent text form") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly(7).to_string() == "7");
    CHECK((q_pow(1) - LaurentPoly(1)).to_string() == "1*q - 1");
    CHECK(qnum(3, true).to_string() == "1*q^4 + 1*q^2 + 1");
    CHECK(qnum(-2, false).to_string() == "-1*q^-1 - 1*q^-2");
    CHECK(LaurentPoly::term(Rational(3, 2), 1).to_string() == "3/2*q");
}

TEST_CASE("laurent division and gcd") {
    LaurentPoly quo;
    CHECK(LaurentPoly::try_divide(q_pow(4) - LaurentPoly(1), q_pow(2) - LaurentPoly(1), quo));
    CHECK(quo == q_pow(2) + LaurentPoly(1));
    CHECK_FALSE(LaurentPoly::try_divide(q_pow(2) + LaurentPoly(1), q_pow(1) + LaurentPoly(1), quo));
    CHECK_THROWS_AS(LaurentPoly::try_divide(q_pow(1), LaurentPoly(), quo), std::domain_error);

    const LaurentPoly qm1 = q_pow(1) - LaurentPoly(1);
    CHECK(LaurentPoly::gcd(q_pow(2) - LaurentPoly(1), q_pow(3) - q_pow(2)) == qm1);
    CHECK(LaurentPoly::gcd(LaurentPoly(), LaurentPoly()) == LaurentPoly());
    CHECK(LaurentPoly::gcd(qm1.scaled(Rational(1, 2)),
                           (q_pow(2) - LaurentPoly(1)).scaled(Rational(1, 3))) == qm1);
    // Pure q powers are units, so their gcd normalizes to 1.
    CHECK(LaurentPoly::gcd(q_pow(5), q_pow(2)) == LaurentPoly(1));
}

TEST_CASE("q-integers match the telescoped fraction") {
    for (long i = -8; i <= 8; ++i) {
        if (i == 0) {
            CHECK(qnum(0, false).is_zero());
            CHECK(qnum(0, true).is_zero());
            continue;
        }
        CHECK(qnum(i, false) == qnum_oracle(i, false));
        CHECK(qnum(i, true) == qnum_oracle(i, true));
    }
    // Frozen small cases.
    CHECK(qnum(1, true) == LaurentPoly(1));
    CHECK(qnum(3, true) == LaurentPoly(1) + q_pow(2) + q_pow(4));
    CHECK(qnum(-1, true) == -q_pow(-2));
    CHECK(qnum(2, false) == LaurentPoly(1) + q_pow(1));
}

TEST_CASE("q-integer telescoping and specialization at q = 1") {
    for (long i = -10; i <= 10; ++i)
        for (long j = -10; j <= 10; ++j) {
            CHECK(qnum(i + j, false) == qnum(i, false) + qnum(j, false).shifted(static_cast<int>(i)));
            CHECK(qnum(i + j, true) == qnum(i, true) + qnum(j, true).shifted(static_cast<int>(2 * i)));
        }
    for (long i = -20; i <= 20; ++i) {
        CHECK(qnum(i, false).evaluate(Rational(1)) == Rational(i));
        CHECK(qnum(i, true).evaluate(Rational(1)) == Rational(i));
    }
}

TEST_CASE("q-factorial") {
    CHECK(qfactorial(1) == LaurentPoly(1));
    CHECK(qfactorial(3) == LaurentPoly(1) + q_pow(2).scaled(Rational(2)) +
                               q_pow(4).scaled(Rational(2)) + q_pow(6));
    long fact = 1;
    for (long n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(qfactorial(n).evaluate(Rational(1)) == Rational(fact));
    }
    CHECK_THROWS_AS(qfactorial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == q_pow(1) - LaurentPoly(1));
    CHECK(cyclotomic(2) == q_pow(1) + LaurentPoly(1));
    CHECK(cyclotomic(3) == q_pow(2) + q_pow(1) + LaurentPoly(1));
    CHECK(cyclotomic(4) == q_pow(2) + LaurentPoly(1));
    CHECK(cyclotomic(6) == q_pow(2) - q_pow(1) + LaurentPoly(1));
    CHECK(cyclotomic(12) == q_pow(4) - q_pow(2) + LaurentPoly(1));
    for (long d = 1; d <= 16; ++d) {
        // prod_{e | d} cyclotomic(e) = q^d - 1
        LaurentPoly prod(1);
        for (long e = 1; e <= d; ++e)
            if (d % e == 0) prod *= cyclotomic(e);
        CHECK(prod == q_pow(static_cast<int>(d)) - LaurentPoly(1));
    }
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("q-integers in q^2 factor into the inverted cyclotomics") {
    for (long i = 2; i <= 8; ++i) {
        LaurentPoly prod(1);
        for (long d = 3; d <= 2 * i; ++d)
            if ((2 * i) % d == 0) prod *= cyclotomic(d);
        CHECK(qnum(i, true) == prod);
    }
}

TEST_CASE("unit divisor sets") {
    CHECK(unit_divisors(2) == std::vector<long>{4});
    CHECK(unit_divisors(3) == std::vector<long>{3, 4, 6});
    CHECK(unit_divisors(4) == std::vector<long>{3, 4, 6, 8});
    CHECK(unit_divisors(5) == std::vector<long>{3, 4, 5, 6, 8, 10});
}

TEST_CASE("unit recognition in the localized ring") {
    CHECK(is_unit(RingElem::q_power(5), 2));
    CHECK(is_unit(-RingElem::q_power(-2), 2));
    CHECK(is_unit(RingElem(qnum(2, true)), 2));
    CHECK(is_unit(RingElem(qnum(2, true)).inverse(), 2));
    CHECK(is_unit(RingElem(qnum(3, true)), 3));
    CHECK_FALSE(is_unit(RingElem(qnum(3, true)), 2));  // needs cyclotomic(3), (6)
    CHECK(is_unit(RingElem(qfactorial(5)), 5));
    CHECK_FALSE(is_unit(RingElem(2), 5));
    CHECK_FALSE(is_unit(RingElem(Rational(1, 2)), 5));
    CHECK_FALSE(is_unit(RingElem(qnum(2, true)).inverse() * RingElem(Rational(1, 2)), 5));
    CHECK_FALSE(is_unit(RingElem(q_pow(1) + LaurentPoly(1)), 5));  // cyclotomic(2) never inverted
    CHECK_THROWS_AS(is_unit(RingElem(), 3), std::invalid_argument);

    // Products of units stay units; randomized with a fixed seed.
    std::mt19937 rng(20260822);
    std::uniform_int_distribution<int> pick(0, 3), sgn(0, 1), ex(-3, 3);
    const long n = 4;
    const std::vector<long> ds = unit_divisors(n);
    for (int trial = 0; trial < 100; ++trial) {
        RingElem u(1);
        for (int f = 0; f < 4; ++f) {
            RingElem factor;
            switch (pick(rng)) {
                case 0: factor = RingElem::q_power(ex(rng)); break;
                case 1: factor = RingElem(cyclotomic(ds[static_cast<std::size_t>(rng() % ds.size())])); break;
                case 2: factor = RingElem(cyclotomic(ds[static_cast<std::size_t>(rng() % ds.size())])).inverse(); break;
                default: factor = RingElem(-1); break;
            }
            u *= factor;
        }
        CHECK(is_unit(u, n));
        CHECK_FALSE(is_unit(u * RingElem(3), n));
    }
}

TEST_CASE("ring element normal form and field laws") {
    const RingElem a(q_pow(2) - LaurentPoly(1), q_pow(1) - LaurentPoly(1));
    CHECK(a.denominator().is_one());
    CHECK(a.to_string() == "1*q + 1");
    CHECK(RingElem(q_pow(1) - LaurentPoly(1), q_pow(2) - LaurentPoly(1)) ==
          RingElem(LaurentPoly(1), q_pow(1) + LaurentPoly(1)));
    CHECK(RingElem(LaurentPoly(3), LaurentPoly(6)).as_rational() == Rational(1, 2));
    CHECK_THROWS_AS(RingElem(LaurentPoly(1), LaurentPoly()), std::domain_error);
    CHECK_THROWS_AS(RingElem(qnum(2, true)).as_rational(), std::domain_error);
    CHECK(RingElem(1).inverse().is_one());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const RingElem x(random_poly(rng));
        const RingElem y(random_poly(rng));
        const RingElem z(random_poly(rng));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x - x).is_zero());
        if (!y.is_zero()) CHECK(x / y * y == x);
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("ring element evaluation and q -> 1 limits") {
    const RingElem r(q_pow(2) + LaurentPoly(1), q_pow(1));
    CHECK(r.evaluate(Rational(2)) == Rational(5, 2));
    CHECK_THROWS_AS(RingElem(LaurentPoly(1), q_pow(1) - LaurentPoly(1)).evaluate(Rational(1)),
                    std::domain_error);
    CHECK(RingElem(qnum(3, true)).limit_q1() == Rational(3));
    CHECK((RingElem(qnum(3, true)) / RingElem(qnum(2, true))).limit_q1() == Rational(3, 2));
    CHECK(RingElem(q_pow(1) - LaurentPoly(1)).limit_q1() == Rational(0));
    CHECK_THROWS_AS(RingElem(LaurentPoly(1), q_pow(1) - LaurentPoly(1)).limit_q1(),
                    std::domain_error);
    // (q^2 - 1)/(q - 1) reduces, so the limit is the evaluation of q + 1.
    CHECK(RingElem(q_pow(2) - LaurentPoly(1), q_pow(1) - LaurentPoly(1)).limit_q1() == Rational(2));
    CHECK(RingElem::q_power(-3).limit_q1() == Rational(1));
}

TEST_CASE("ring element text form") {
    CHECK(RingElem().to_string() == "0");
    CHECK(RingElem::q_power(-1).to_string() == "1*q^-1");
    CHECK((-RingElem::q_power(-1)).to_string() == "-1*q^-1");
    CHECK(RingElem(Rational(3, 2)).to_string() == "3/2");
    CHECK(RingElem(qnum(2, true)).inverse().to_string() == "1 / 1*q^2 + 1");
}

TEST_CASE("series reduction at q = 1 + t over a prime field") {
    const FpSeries s1 = substitute_series(qnum(2, true), 2, 4);
    CHECK(s1.to_string() == "1*t^2");
    CHECK(s1.valuation() == 2);
    CHECK(s1.leading_coeff() == 1);

    const FpSeries s2 = substitute_series(qnum(2, true), 3, 4);
    CHECK(s2.to_string() == "2 + 2*t + 1*t^2");
    CHECK(s2.valuation() == 0);
    CHECK(s2.leading_coeff() == 2);

    const FpSeries s3 = substitute_series(qnum(3, true), 3, 6);
    CHECK(s3.to_string() == "1*t^2 + 1*t^3 + 1*t^4");

    const FpSeries s4 = substitute_series(q_pow(-1), 5, 3);
    CHECK(s4.to_string() == "1 + 4*t + 1*t^2");

    CHECK(substitute_series(LaurentPoly(), 3, 2).is_zero());
    CHECK(substitute_series(LaurentPoly(), 3, 2).valuation() == -1);
    CHECK_THROWS_AS(substitute_series(LaurentPoly(Rational(1, 2)), 2, 4), std::domain_error);
    CHECK_THROWS_AS(FpSeries(1, 4), std::invalid_argument);
}
