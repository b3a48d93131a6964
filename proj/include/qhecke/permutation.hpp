#pragma once

// Permutations of {1..n} in one-line notation, composed as functions:
// (u * v)(k) = u(v(k)). Reduced words use the convention that the word
// (i_1, ..., i_l) stands for the product s_{i_1} * ... * s_{i_l} of adjacent
// transpositions s_i = (i, i+1).
//
// Text forms: one-line "[2,3,1]" on output; input additionally accepts cycle
// notation "(1 2 3)" or "(1 2)(3 4)" and "e" for the identity.

#include <string>
#include <vector>

namespace qhecke {

class Permutation {
public:
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation adjacent(int n, int i);  // s_i, 1 <= i <= n-1
    static Permutation transposition(int n, int i, int j);
    static std::vector<Permutation> all(int n);  // lexicographic by one-line

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;

    bool is_identity() const;
    long length() const;  // inversion count
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    // Deterministic reduced word: repeatedly bubbles the largest displaced
    // value into place. Length always equals length().
    std::vector<int> reduced_word() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string to_string() const;
    static Permutation parse(const std::string& s, int n);

private:
    std::vector<int> img_;  // img_[k-1] = image of k
};

}  // namespace qhecke
