#pragma once

// Words are the monomial basis of tensor space: sequences of letters 1..d of
// length n, ordered lexicographically. Kept as bare vectors; the ambient
// alphabet size travels alongside where it matters.

#include <vector>

namespace qhecke {

using Word = std::vector<int>;

struct Ambient {
    int n = 0;  // word length
    int d = 0;  // alphabet size
    bool operator==(const Ambient&) const = default;
};

// Letter multiplicities (count of 1s, ..., count of ds); length d.
std::vector<int> multidegree(const Word& w, int d);

// weight_i = (count of letter i) - (count of letter i+1), 1 <= i <= d-1.
int weight(const Word& w, int i, int d);

// All d^n words of length n, lexicographic.
std::vector<Word> all_words(int n, int d);

// All words with the given letter multiplicities, lexicographic.
std::vector<Word> words_of_multidegree(const std::vector<int>& mdeg);

}  // namespace qhecke
