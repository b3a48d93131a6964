#pragma once

// Partitions with a fixed number of parts (trailing zeros retained), generating
// sequences, standard Young tableaux, and the bijection between the latter two.
//
// A generating sequence (r_1,...,r_n) lists, from the outermost letter inward,
// the row each construction step adds a box to. It is valid when r_n = 1 and in
// every terminal segment no value k occurs more often than k-1 does. The
// bijection places entry i+1 in row r_{n-i}.

#include <string>
#include <vector>

#include "qhecke/word.hpp"

namespace qhecke {

class Partition {
public:
    // parts must be non-increasing and non-negative; length is kept as given.
    explicit Partition(std::vector<int> parts);

    int total() const;                              // sum of the parts
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int r) const;                          // 1-based, 0 past the end

    // Rows that can lose one box with the result still non-increasing: the
    // one-step predecessors p' with p = p' + e_r.
    std::vector<int> removable_rows() const;
    Partition decremented(int r) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // e.g. "[2,1,0]"

    // All partitions of n into at most d parts (zero-padded to length d), in
    // descending lexicographic order: (n,0,..), .., (1,1,..,1) when d >= n.
    static std::vector<Partition> all(int n, int d);

private:
    std::vector<int> parts_;
};

class GeneratingSequence {
public:
    explicit GeneratingSequence(std::vector<int> rows);

    static bool is_valid(const std::vector<int>& rows);

    const std::vector<int>& rows() const { return rows_; }
    int size() const { return static_cast<int>(rows_.size()); }
    // Letter-count partition of the sequence, padded to length d.
    Partition shape(int d) const;

    bool operator==(const GeneratingSequence& o) const { return rows_ == o.rows_; }
    bool operator<(const GeneratingSequence& o) const { return rows_ < o.rows_; }

    std::string to_string() const;  // e.g. "(1,2,1)"

private:
    std::vector<int> rows_;
};

class StandardTableau {
public:
    // Validates: entries exactly 1..n, rows and columns strictly increasing,
    // row lengths non-increasing, no empty rows.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const;  // number of entries
    Partition shape(int d) const;
    // Entries read row by row, top to bottom; the sort key for basis order.
    std::vector<int> row_reading() const;

    bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
    bool operator<(const StandardTableau& o) const { return row_reading() < o.row_reading(); }

    std::string to_string() const;  // e.g. "[[1,2],[3]]"

private:
    std::vector<std::vector<int>> rows_;
};

// Entry i+1 goes to row r_{n-i}; sequences and tableaux are mutually inverse.
StandardTableau seq_to_tableau(const GeneratingSequence& s);
GeneratingSequence tableau_to_seq(const StandardTableau& t);

// All valid sequences with letter counts p, in lexicographic order.
std::vector<GeneratingSequence> enumerate_sequences(const Partition& p);

// Number of standard tableaux of shape p by the hook length formula; an
// independent count for cross-checking the enumeration above.
long hook_length_count(const Partition& p);

}  // namespace qhecke
