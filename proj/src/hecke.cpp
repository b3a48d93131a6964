#include "qhecke/hecke.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qhecke/laurent.hpp"

namespace qhecke {

HeckeElement HeckeElement::basis(const Permutation& w) {
    HeckeElement e(w.degree());
    e.terms_.emplace(w, RingElem(1));
    return e;
}

RingElem HeckeElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RingElem() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const RingElem& c) {
    if (w.degree() != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("HeckeElement: degree mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("HeckeElement: degree mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const RingElem& c) const {
    HeckeElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*T" << w.to_string();
    }
    return os.str();
}

namespace {

// T_i * T_w resolved by the length rule; memoized per (i, w). The value is
// the target permutation plus a flag for the length-drop case.
struct GenProduct {
    Permutation target;
    bool length_drop;
};

const GenProduct& generator_product(int i, const Permutation& w) {
    static std::map<std::pair<int, Permutation>, GenProduct> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(i, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Permutation sw = Permutation::adjacent(w.degree(), i) * w;
    GenProduct gp{sw, sw.length() < w.length()};
    return cache.emplace(std::move(key), std::move(gp)).first->second;
}

// T_i * a, extended linearly from the cached single-basis rule.
HeckeElement generator_multiply(int i, const HeckeElement& a) {
    HeckeElement out(a.degree());
    const RingElem qdiff = RingElem::q_power(1) - RingElem::q_power(-1);
    for (const auto& [w, c] : a.terms()) {
        const GenProduct& gp = generator_product(i, w);
        if (gp.length_drop) out.add_term(w, c * qdiff);
        out.add_term(gp.target, c);
    }
    return out;
}

}  // namespace

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("hecke_multiply: degree mismatch");
    HeckeElement out(a.degree());
    for (const auto& [u, cu] : a.terms()) {
        // T_u T_v = T_{i_1} ... T_{i_l} T_v along a reduced word of u.
        HeckeElement acc = b.scaled(cu);
        const std::vector<int> word = u.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = generator_multiply(*it, acc);
        out += acc;
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& w, const Rational& c) {
    GroupAlgebraElement e(w.degree());
    if (!c.is_zero()) e.terms_.emplace(w, c);
    return e;
}

Rational GroupAlgebraElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Rational& c) {
    if (w.degree() != n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    GroupAlgebraElement r(n_);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) r.add_term(u * v, cu * cv);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
    GroupAlgebraElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << w.to_string();
    }
    return os.str();
}

GroupAlgebraElement specialize_q1(const HeckeElement& a) {
    GroupAlgebraElement out(a.degree());
    for (const auto& [w, c] : a.terms()) out.add_term(w, c.limit_q1());
    return out;
}

}  // namespace qhecke
