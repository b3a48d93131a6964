#include "qhecke/qarith.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qhecke {

LaurentPoly qnum(long i, bool squared) {
    const int k = squared ? 2 : 1;
    LaurentPoly s;
    if (i > 0) {
        for (long j = 0; j < i; ++j) s += LaurentPoly::q_power(k * static_cast<int>(j));
    } else {
        for (long j = 1; j <= -i; ++j) s -= LaurentPoly::q_power(-k * static_cast<int>(j));
    }
    return s;
}

LaurentPoly qfactorial(long n) {
    if (n < 1) throw std::invalid_argument("qfactorial: n must be >= 1");
    LaurentPoly f(1);
    for (long i = 2; i <= n; ++i) f *= qnum(i, true);
    return f;
}

LaurentPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    static std::map<long, LaurentPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly p = LaurentPoly::q_power(static_cast<int>(d)) - LaurentPoly(1);
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        LaurentPoly quo;
        if (!LaurentPoly::try_divide(p, cyclotomic(e), quo))
            throw std::logic_error("cyclotomic: inexact division");
        p = quo;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, p);
    return p;
}

std::vector<long> unit_divisors(long n) {
    std::vector<long> out;
    for (long d = 3; d <= 2 * n; ++d)
        for (long i = 2; i <= n; ++i)
            if ((2 * i) % d == 0) {
                out.push_back(d);
                break;
            }
    return out;
}

bool is_unit(const RingElem& e, long n) {
    if (e.is_zero()) throw std::invalid_argument("is_unit: zero element");
    // Clear rational denominators with one common scalar so the fraction is a
    // ratio of integer-coefficient polynomials, then strip q powers and trial
    // divide by the inverted cyclotomics. Unit iff both residuals are +-1.
    mpz_class lcm(1);
    for (const auto& [exp, c] : e.numerator().terms()) {
        (void)exp;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        lcm = l;
    }
    const Rational scale{lcm};
    LaurentPoly num = e.numerator().scaled(scale);
    LaurentPoly den = e.denominator().scaled(scale);
    const std::vector<long> divisors = unit_divisors(n);
    auto strip = [&divisors](LaurentPoly p) {
        p = p.shifted(-p.low());
        for (long d : divisors) {
            const LaurentPoly phi = cyclotomic(d);
            LaurentPoly quo;
            while (LaurentPoly::try_divide(p, phi, quo)) p = quo.shifted(-quo.low());
        }
        return p;
    };
    auto is_pm_one = [](const LaurentPoly& p) {
        return p.is_constant() && p.constant_coeff().abs().is_one();
    };
    return is_pm_one(strip(num)) && is_pm_one(strip(den));
}

FpSeries::FpSeries(long prime, std::size_t precision) : p_(prime) {
    if (prime < 2) throw std::invalid_argument("FpSeries: prime must be >= 2");
    if (precision == 0) throw std::invalid_argument("FpSeries: precision must be >= 1");
    c_.assign(precision, 0);
}

void FpSeries::set_coeff(std::size_t k, long v) {
    long r = v % p_;
    if (r < 0) r += p_;
    c_.at(k) = r;
}

bool FpSeries::is_zero() const {
    for (long v : c_)
        if (v != 0) return false;
    return true;
}

long FpSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<long>(k);
    return -1;
}

long FpSeries::leading_coeff() const {
    const long v = valuation();
    if (v < 0) throw std::domain_error("FpSeries: leading coefficient of zero");
    return c_[static_cast<std::size_t>(v)];
}

FpSeries FpSeries::operator*(const FpSeries& o) const {
    if (p_ != o.p_ || c_.size() != o.c_.size())
        throw std::invalid_argument("FpSeries: mismatched series");
    FpSeries r(p_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j)
            r.c_[i + j] = (r.c_[i + j] + c_[i] * o.c_[j]) % p_;
    }
    return r;
}

FpSeries& FpSeries::operator+=(const FpSeries& o) {
    if (p_ != o.p_ || c_.size() != o.c_.size())
        throw std::invalid_argument("FpSeries: mismatched series");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
    return *this;
}

std::string FpSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k];
        if (k == 1)
            os << "*t";
        else if (k > 1)
            os << "*t^" << k;
    }
    return first ? "0" : os.str();
}

namespace {

long mod_p(const mpz_class& z, long p) {
    return static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        const long quo = r / nr;
        t -= quo * nt;
        std::swap(t, nt);
        r -= quo * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return t < 0 ? t + p : t;
}

}  // namespace

FpSeries substitute_series(const LaurentPoly& p, long prime, std::size_t precision) {
    FpSeries result(prime, precision);
    if (p.is_zero()) return result;

    FpSeries one_plus_t(prime, precision);
    one_plus_t.set_coeff(0, 1);
    if (precision > 1) one_plus_t.set_coeff(1, 1);
    FpSeries inv(prime, precision);  // 1/(1+t) = 1 - t + t^2 - ...
    for (std::size_t k = 0; k < precision; ++k) inv.set_coeff(k, k % 2 == 0 ? 1 : prime - 1);

    // (1+t)^e for the exponents present, walked incrementally from the lowest.
    const int lo = p.low();
    FpSeries pw(prime, precision);
    pw.set_coeff(0, 1);
    {
        const FpSeries& step = lo >= 0 ? one_plus_t : inv;
        for (int e = 0; e != lo; e += lo > 0 ? 1 : -1) pw = pw * step;
    }
    for (int e = lo; e <= p.degree(); ++e) {
        const Rational c = p.coeff(e);
        if (!c.is_zero()) {
            const long dm = mod_p(c.den(), prime);
            if (dm == 0)
                throw std::domain_error("substitute_series: coefficient denominator divisible by prime");
            const long cm = mod_p(c.num(), prime) * inv_mod(dm, prime) % prime;
            FpSeries termv(prime, precision);
            for (std::size_t k = 0; k < precision; ++k)
                termv.set_coeff(k, pw.coeff(k) * cm % prime);
            result += termv;
        }
        pw = pw * one_plus_t;
    }
    return result;
}

}  // namespace qhecke
