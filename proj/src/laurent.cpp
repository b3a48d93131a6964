#include "qhecke/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qhecke {

namespace {

// Dense coefficient block c[0..deg] for the polynomial part of p shifted to
// lowest exponent 0. p must be nonzero.
std::vector<Rational> dense_shifted(const LaurentPoly& p) {
    const int lo = p.low();
    std::vector<Rational> c(static_cast<std::size_t>(p.width()) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - lo)] = v;
    return c;
}

int dense_degree(const std::vector<Rational>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;  // zero polynomial
}

// a := a mod b over Q, returning the quotient. b nonzero.
std::vector<Rational> dense_divmod(std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int db = dense_degree(b);
    const Rational lead_inv = b[static_cast<std::size_t>(db)].inverse();
    int da = dense_degree(a);
    std::vector<Rational> quo(da >= db ? static_cast<std::size_t>(da - db) + 1 : 1);
    while (da >= db) {
        const Rational f = a[static_cast<std::size_t>(da)] * lead_inv;
        quo[static_cast<std::size_t>(da - db)] = f;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= f * b[static_cast<std::size_t>(j)];
        da = dense_degree(a);
    }
    return quo;
}

LaurentPoly from_dense(const std::vector<Rational>& c, int shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) p += LaurentPoly::term(c[i], static_cast<int>(i) + shift);
    return p;
}

// Rescales to integer coefficients with content 1 and positive leading
// coefficient (coefficient-growth control inside the Euclidean loop).
void dense_primitive(std::vector<Rational>& a) {
    const int d = dense_degree(a);
    if (d < 0) return;
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : a) {
        if (c.is_zero()) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = abs(g);
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    Rational scale(den_lcm, num_gcd);
    if (a[static_cast<std::size_t>(d)].sign() < 0) scale = -scale;
    for (auto& c : a) c *= scale;
}

}  // namespace

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero");
    return terms_.rbegin()->first;
}

int LaurentPoly::low() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: low exponent of zero");
    return terms_.begin()->first;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading() const { return terms_.rbegin()->second; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            const int e = ea + eb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
    return r;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
    if (!is_zero() && low() < 0 && q0.is_zero())
        throw std::domain_error("LaurentPoly: evaluating negative exponents at q = 0");
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * q0.pow(e);
    return acc;
}

bool LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (a.is_zero()) {
        quo = LaurentPoly();
        return true;
    }
    std::vector<Rational> rem = dense_shifted(a);
    const std::vector<Rational> den = dense_shifted(b);
    if (dense_degree(rem) < dense_degree(den)) return false;
    const std::vector<Rational> q = dense_divmod(rem, den);
    if (dense_degree(rem) >= 0) return false;
    quo = from_dense(q, a.low() - b.low());
    return true;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    auto normal = [](const LaurentPoly& p) {
        auto [c, prim] = p.primitive_parts();
        (void)c;
        return prim.shifted(-prim.low());
    };
    if (a.is_zero()) return normal(b);
    if (b.is_zero()) return normal(a);
    std::vector<Rational> r0 = dense_shifted(a);
    std::vector<Rational> r1 = dense_shifted(b);
    dense_primitive(r0);
    dense_primitive(r1);
    while (dense_degree(r1) >= 0) {
        dense_divmod(r0, r1);
        std::swap(r0, r1);
        dense_primitive(r1);
    }
    LaurentPoly g = from_dense(r0, 0);
    return normal(g);
}

std::pair<Rational, LaurentPoly> LaurentPoly::primitive_parts() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: primitive part of zero");
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        (void)e;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = abs(g);
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    Rational content(num_gcd, den_lcm);
    if (leading().sign() < 0) content = -content;
    return {content, scaled(content.inverse())};
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const Rational& c = it->second;
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << c.abs().to_string();
        if (e == 1)
            os << "*q";
        else if (e != 0)
            os << "*q^" << e;
    }
    return os.str();
}

}  // namespace qhecke
