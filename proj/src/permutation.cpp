#include "qhecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhecke {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
    img_.resize(static_cast<std::size_t>(n));
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = degree();
    if (n < 1) throw std::invalid_argument("Permutation: empty one-line form");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::adjacent(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("Permutation: generator index out of range");
    return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p(n);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("Permutation: bad transposition");
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
    return p;
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> line(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k)
        line[k] = img_[static_cast<std::size_t>(o.img_[k] - 1)];
    Permutation p(1);
    p.img_ = std::move(line);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> line(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k)
        line[static_cast<std::size_t>(img_[k] - 1)] = static_cast<int>(k) + 1;
    Permutation p(1);
    p.img_ = std::move(line);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != static_cast<int>(k) + 1) return false;
    return true;
}

long Permutation::length() const {
    long inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // Right-multiplying by s_j swaps positions j, j+1. Walk each value m = n..1
    // right from its current position to position m; the recorded generators
    // multiply w to the identity, so w is their product reversed.
    std::vector<int> a = img_;
    std::vector<int> rec;
    const int n = degree();
    for (int m = n; m >= 1; --m) {
        int j = 0;
        while (a[static_cast<std::size_t>(j)] != m) ++j;
        for (; j + 1 < m; ++j) {
            std::swap(a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j + 1)]);
            rec.push_back(j + 1);
        }
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (k) os << ',';
        os << img_[k];
    }
    os << ']';
    return os.str();
}

Permutation Permutation::parse(const std::string& s, int n) {
    if (s.empty()) throw std::invalid_argument("Permutation: empty string");
    if (s == "e" || s == "()") return Permutation(n);
    if (s.front() == '[') {
        std::vector<int> line;
        std::string body = s.substr(1, s.size() - (s.back() == ']' ? 2 : 1));
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) line.push_back(std::stoi(tok));
        if (static_cast<int>(line.size()) != n)
            throw std::invalid_argument("Permutation: one-line length mismatch");
        return Permutation(line);
    }
    if (s.front() == '(') {
        Permutation p(n);
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') throw std::invalid_argument("Permutation: expected '('");
            const std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("Permutation: unbalanced cycle");
            std::istringstream is(s.substr(pos + 1, close - pos - 1));
            std::vector<int> cyc;
            std::string tok;
            while (is >> tok) {
                // allow comma separators too
                for (auto& ch : tok)
                    if (ch == ',') ch = ' ';
                std::istringstream is2(tok);
                int v;
                while (is2 >> v) cyc.push_back(v);
            }
            if (cyc.size() > 1) {
                // cycle (c1 c2 ... ck): c1 -> c2 -> ... -> ck -> c1
                std::vector<int> line(static_cast<std::size_t>(n));
                for (int k = 1; k <= n; ++k) line[static_cast<std::size_t>(k - 1)] = k;
                for (std::size_t k = 0; k < cyc.size(); ++k) {
                    const int from = cyc[k];
                    const int to = cyc[(k + 1) % cyc.size()];
                    if (from < 1 || from > n) throw std::invalid_argument("Permutation: cycle entry out of range");
                    line[static_cast<std::size_t>(from - 1)] = to;
                }
                p = p * Permutation(line);
            }
            pos = close + 1;
        }
        return p;
    }
    throw std::invalid_argument("Permutation: cannot parse '" + s + "'");
}

}  // namespace qhecke
