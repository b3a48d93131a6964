#include "qhecke/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) throw std::invalid_argument("Partition: negative part");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int r) const {
    if (r < 1) throw std::invalid_argument("Partition::part: rows are 1-based");
    return r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0;
}

std::vector<int> Partition::removable_rows() const {
    std::vector<int> rows;
    for (int r = 1; r <= length(); ++r)
        if (part(r) > 0 && part(r) - 1 >= part(r + 1)) rows.push_back(r);
    return rows;
}

Partition Partition::decremented(int r) const {
    if (r < 1 || r > length() || part(r) == 0 || part(r) - 1 < part(r + 1))
        throw std::invalid_argument("Partition::decremented: row not removable");
    std::vector<int> parts = parts_;
    --parts[static_cast<std::size_t>(r - 1)];
    return Partition(parts);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ',';
        os << parts_[k];
    }
    os << ']';
    return os.str();
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& acc, int d,
                        std::vector<Partition>& out) {
    if (static_cast<int>(acc.size()) == d) {
        if (remaining == 0) out.push_back(Partition(acc));
        return;
    }
    const int slots_left = d - static_cast<int>(acc.size());
    for (int p = std::min(remaining, max_part); p >= 0; --p) {
        if (p == 0 && remaining > 0) break;  // zeros cannot absorb the rest
        if (static_cast<long>(p) * slots_left < remaining) break;
        acc.push_back(p);
        collect_partitions(remaining - p, p, acc, d, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> Partition::all(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("Partition::all: need n >= 0, d >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    collect_partitions(n, n, acc, d, out);
    return out;
}

GeneratingSequence::GeneratingSequence(std::vector<int> rows) : rows_(std::move(rows)) {
    if (!is_valid(rows_)) throw std::invalid_argument("GeneratingSequence: invalid sequence");
}

bool GeneratingSequence::is_valid(const std::vector<int>& rows) {
    if (rows.empty()) return true;
    if (rows.back() != 1) return false;
    const int maxrow = *std::max_element(rows.begin(), rows.end());
    if (*std::min_element(rows.begin(), rows.end()) < 1) return false;
    // counts over the growing terminal segment
    std::vector<int> count(static_cast<std::size_t>(maxrow) + 1, 0);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        ++count[static_cast<std::size_t>(*it)];
        if (*it > 1 && count[static_cast<std::size_t>(*it)] > count[static_cast<std::size_t>(*it - 1)])
            return false;
    }
    return true;
}

Partition GeneratingSequence::shape(int d) const {
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    for (int r : rows_) {
        if (r > d) throw std::invalid_argument("GeneratingSequence::shape: row exceeds d");
        ++counts[static_cast<std::size_t>(r - 1)];
    }
    return Partition(counts);
}

std::string GeneratingSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k) os << ',';
        os << rows_[k];
    }
    os << ')';
    return os.str();
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = 0;
    for (const auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("StandardTableau: empty row");
        n += static_cast<int>(row.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r + 1 < rows_.size() && rows_[r].size() < rows_[r + 1].size())
            throw std::invalid_argument("StandardTableau: shape not non-increasing");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int e = rows_[r][c];
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("StandardTableau: entries must be exactly 1..n");
            seen[static_cast<std::size_t>(e)] = true;
            if (c > 0 && rows_[r][c - 1] >= e)
                throw std::invalid_argument("StandardTableau: row not increasing");
            if (r > 0 && rows_[r - 1][c] >= e)
                throw std::invalid_argument("StandardTableau: column not increasing");
        }
    }
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

Partition StandardTableau::shape(int d) const {
    if (static_cast<int>(rows_.size()) > d)
        throw std::invalid_argument("StandardTableau::shape: more rows than d");
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) parts[r] = static_cast<int>(rows_[r].size());
    return Partition(parts);
}

std::vector<int> StandardTableau::row_reading() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ',';
            os << rows_[r][c];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

StandardTableau seq_to_tableau(const GeneratingSequence& s) {
    const auto& rows = s.rows();
    const int n = s.size();
    const int maxrow = n == 0 ? 0 : *std::max_element(rows.begin(), rows.end());
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(maxrow));
    for (int i = 0; i < n; ++i)
        tab[static_cast<std::size_t>(rows[static_cast<std::size_t>(n - i - 1)] - 1)].push_back(i + 1);
    return StandardTableau(tab);
}

GeneratingSequence tableau_to_seq(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int e : t.rows()[r])
            rows[static_cast<std::size_t>(n - e)] = static_cast<int>(r) + 1;
    return GeneratingSequence(rows);
}

std::vector<GeneratingSequence> enumerate_sequences(const Partition& p) {
    std::vector<int> letters;
    for (int r = 1; r <= p.length(); ++r)
        letters.insert(letters.end(), static_cast<std::size_t>(p.part(r)), r);
    std::sort(letters.begin(), letters.end());
    std::vector<GeneratingSequence> out;
    do {
        if (GeneratingSequence::is_valid(letters)) out.push_back(GeneratingSequence(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

long hook_length_count(const Partition& p) {
    const int n = p.total();
    long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    // hook of cell (r,c): arm + leg + 1
    long hooks = 1;
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.part(r); ++c) {
            int leg = 0;
            for (int rr = r + 1; rr <= p.length(); ++rr)
                if (p.part(rr) >= c) ++leg;
            hooks *= p.part(r) - c + leg + 1;
        }
    return factorial / hooks;
}

}  // namespace qhecke
