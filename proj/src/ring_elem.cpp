#include "qhecke/ring_elem.hpp"

#include <stdexcept>
#include <vector>

namespace qhecke {

namespace {

// Coefficients of p(1 + t) as a dense polynomial in t. p must have no
// negative exponents.
std::vector<Rational> expand_at_one_plus_t(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    const int deg = p.degree();
    std::vector<Rational> out(static_cast<std::size_t>(deg) + 1, Rational(0));
    std::vector<Rational> pw(1, Rational(1));  // (1+t)^e, updated incrementally
    for (int e = 0; e <= deg; ++e) {
        if (e > 0) {
            std::vector<Rational> next(static_cast<std::size_t>(e) + 1, Rational(0));
            for (std::size_t j = 0; j < pw.size(); ++j) {
                next[j] += pw[j];
                next[j + 1] += pw[j];
            }
            pw = std::move(next);
        }
        const Rational c = p.coeff(e);
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < pw.size(); ++j) out[j] += c * pw[j];
    }
    return out;
}

int t_valuation(const std::vector<Rational>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;  // zero
}

}  // namespace

RingElem::RingElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RingElem::normalize() {
    if (den_.is_zero()) throw std::domain_error("RingElem: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const int den_low = den_.low();
    den_ = den_.shifted(-den_low);
    num_ = num_.shifted(-den_low);
    const int num_low = num_.low();
    LaurentPoly num_part = num_.shifted(-num_low);
    const LaurentPoly g = LaurentPoly::gcd(num_part, den_);
    if (!g.is_one()) {
        LaurentPoly q;
        if (!LaurentPoly::try_divide(num_part, g, q))
            throw std::logic_error("RingElem: gcd does not divide numerator");
        num_part = q;
        if (!LaurentPoly::try_divide(den_, g, q))
            throw std::logic_error("RingElem: gcd does not divide denominator");
        den_ = q;
    }
    auto [content, prim] = den_.primitive_parts();
    den_ = prim;
    num_ = num_part.shifted(num_low).scaled(content.inverse());
}

Rational RingElem::as_rational() const {
    if (!is_constant()) throw std::domain_error("RingElem: not a constant");
    return num_.constant_coeff();
}

RingElem RingElem::operator-() const {
    RingElem r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RingElem& RingElem::operator/=(const RingElem& o) {
    if (o.is_zero()) throw std::domain_error("RingElem: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RingElem RingElem::inverse() const {
    if (is_zero()) throw std::domain_error("RingElem: inverse of zero");
    return RingElem(den_, num_);
}

bool RingElem::operator==(const RingElem& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational RingElem::evaluate(const Rational& q0) const {
    const Rational d = den_.evaluate(q0);
    if (d.is_zero()) throw std::domain_error("RingElem: pole at evaluation point");
    return num_.evaluate(q0) / d;
}

Rational RingElem::limit_q1() const {
    if (is_zero()) return Rational(0);
    const int shift = num_.low() < 0 ? -num_.low() : 0;
    const std::vector<Rational> nt = expand_at_one_plus_t(num_.shifted(shift));
    const std::vector<Rational> dt = expand_at_one_plus_t(den_.shifted(shift));
    const int vn = t_valuation(nt);
    const int vd = t_valuation(dt);
    if (vn < vd) throw std::domain_error("RingElem: pole at q = 1");
    if (vn > vd) return Rational(0);
    return nt[static_cast<std::size_t>(vn)] / dt[static_cast<std::size_t>(vd)];
}

std::string RingElem::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

}  // namespace qhecke
