#include "qhecke/tensor_vector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhecke {

std::vector<int> multidegree(const Word& w, int d) {
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    for (int letter : w) {
        if (letter < 1 || letter > d) throw std::invalid_argument("multidegree: letter out of range");
        ++counts[static_cast<std::size_t>(letter - 1)];
    }
    return counts;
}

int weight(const Word& w, int i, int d) {
    if (i < 1 || i >= d) throw std::invalid_argument("weight: index out of range");
    const std::vector<int> m = multidegree(w, d);
    return m[static_cast<std::size_t>(i - 1)] - m[static_cast<std::size_t>(i)];
}

std::vector<Word> all_words(int n, int d) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(w);
        int k = n - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == d) {
            w[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++w[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<Word> words_of_multidegree(const std::vector<int>& mdeg) {
    Word sorted;
    for (std::size_t letter = 0; letter < mdeg.size(); ++letter) {
        if (mdeg[letter] < 0) throw std::invalid_argument("words_of_multidegree: negative count");
        sorted.insert(sorted.end(), static_cast<std::size_t>(mdeg[letter]),
                      static_cast<int>(letter) + 1);
    }
    std::vector<Word> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

TensorVector TensorVector::monomial(Ambient amb, const Word& w, const RingElem& c) {
    TensorVector v(amb);
    v.add_term(w, c);
    return v;
}

RingElem TensorVector::coeff(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? RingElem() : it->second;
}

void TensorVector::add_term(const Word& w, const RingElem& c) {
    if (static_cast<int>(w.size()) != amb_.n)
        throw std::invalid_argument("TensorVector: word length does not match ambient");
    for (int letter : w)
        if (letter < 1 || letter > amb_.d)
            throw std::invalid_argument("TensorVector: letter out of range");
    if (c.is_zero()) return;
    auto it = entries_.find(w);
    if (it == entries_.end()) {
        entries_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (!(amb_ == o.amb_)) throw std::invalid_argument("TensorVector: ambient mismatch");
    for (const auto& [w, c] : o.entries_) add_term(w, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (!(amb_ == o.amb_)) throw std::invalid_argument("TensorVector: ambient mismatch");
    for (const auto& [w, c] : o.entries_) add_term(w, -c);
    return *this;
}

TensorVector TensorVector::operator-() const {
    TensorVector r(amb_);
    for (const auto& [w, c] : entries_) r.entries_.emplace(w, -c);
    return r;
}

TensorVector TensorVector::scaled(const RingElem& c) const {
    TensorVector r(amb_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : entries_) r.entries_.emplace(w, v * c);
    return r;
}

TensorVector TensorVector::evaluate(const Rational& q0) const {
    TensorVector r(amb_);
    for (const auto& [w, c] : entries_) r.add_term(w, RingElem(c.evaluate(q0)));
    return r;
}

TensorVector TensorVector::specialize_q1() const {
    TensorVector r(amb_);
    for (const auto& [w, c] : entries_) r.add_term(w, RingElem(c.limit_q1()));
    return r;
}

std::string TensorVector::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*[";
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) os << ",";
            os << w[k];
        }
        os << "]";
    }
    return os.str();
}

RingElem inner_product(const TensorVector& u, const TensorVector& v) {
    if (!(u.ambient() == v.ambient()))
        throw std::invalid_argument("inner_product: ambient mismatch");
    RingElem acc;
    const auto& a = u.entries();
    const auto& b = v.entries();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

TensorVector prepend_letter(int letter, const TensorVector& v) {
    const Ambient amb{v.ambient().n + 1, v.ambient().d};
    TensorVector r(amb);
    for (const auto& [w, c] : v.entries()) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(letter);
        nw.insert(nw.end(), w.begin(), w.end());
        r.add_term(nw, c);
    }
    return r;
}

}  // namespace qhecke
