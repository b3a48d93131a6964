#include "qhecke/idempotents.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhecke {

namespace {

std::size_t perm_index(const RepresentationTable& table, const Permutation& w) {
    const auto it = std::lower_bound(table.perms.begin(), table.perms.end(), w);
    if (it == table.perms.end() || !(*it == w))
        throw std::invalid_argument("representation table: unknown permutation");
    return static_cast<std::size_t>(it - table.perms.begin());
}

std::size_t block_offset(const RepresentationTable& table, std::size_t p_index) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < p_index; ++k) {
        const std::size_t f = table.rho[k][0].size();
        offset += f * f;
    }
    return offset;
}

GroupAlgebraElement solve_for_target(const RepresentationTable& table,
                                     const std::vector<Rational>& target) {
    const std::vector<Rational> coeffs = apply(table.solve_inverse, target);
    GroupAlgebraElement out(table.n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term(table.perms[k], coeffs[k]);
    return out;
}

// All permutations fixing each block of entries setwise.
std::vector<Permutation> block_stabilizer(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<Permutation> out;
    for (const Permutation& s : Permutation::all(n)) {
        bool ok = true;
        for (const auto& block : blocks) {
            for (int e : block)
                if (std::find(block.begin(), block.end(), s(e)) == block.end()) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace

RepresentationTable rep_table(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("rep_table: supported degrees are 2..5");
    RepresentationTable table;
    table.n = n;
    table.perms = Permutation::all(n);
    table.partitions = Partition::all(n, n);

    for (const Partition& p : table.partitions) {
        std::vector<StandardTableau> tabs;
        for (const GeneratingSequence& s : enumerate_sequences(p))
            tabs.push_back(seq_to_tableau(s));
        std::sort(tabs.begin(), tabs.end());
        table.tableaux.push_back(std::move(tabs));

        const std::map<int, RingMatrix> symbolic = rep_matrices(p);
        std::vector<QMatrix> gens;
        for (int i = 1; i < n; ++i) {
            const RingMatrix& m = symbolic.at(i);
            QMatrix g(m.size(), std::vector<Rational>(m.size(), Rational(0)));
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b) g[a][b] = m[a][b].limit_q1();
            gens.push_back(std::move(g));
        }
        table.rho.push_back(extend_generators(gens, n));
    }

    // flattening matrix: column sigma holds every rho block of sigma, stacked
    const std::size_t order = table.perms.size();
    QMatrix flat(order, std::vector<Rational>(order, Rational(0)));
    std::size_t row = 0;
    for (const auto& block : table.rho) {
        const std::size_t f = block[0].size();
        for (std::size_t s = 0; s < f; ++s)
            for (std::size_t t = 0; t < f; ++t, ++row)
                for (std::size_t col = 0; col < order; ++col) flat[row][col] = block[col][s][t];
    }
    if (row != order)
        throw std::logic_error("rep_table: squared dimensions do not sum to the group order");
    table.solve_inverse = inverse(flat);
    return table;
}

QMatrix represent(const RepresentationTable& table, std::size_t p_index,
                  const GroupAlgebraElement& a) {
    if (p_index >= table.rho.size())
        throw std::invalid_argument("represent: partition index out of range");
    const std::size_t f = table.rho[p_index][0].size();
    QMatrix out(f, std::vector<Rational>(f, Rational(0)));
    for (const auto& [w, c] : a.terms()) {
        const QMatrix& m = table.rho[p_index][perm_index(table, w)];
        for (std::size_t s = 0; s < f; ++s)
            for (std::size_t t = 0; t < f; ++t) out[s][t] += c * m[s][t];
    }
    return out;
}

GroupAlgebraElement central_idempotent(const RepresentationTable& table, const Partition& p) {
    const auto it = std::find(table.partitions.begin(), table.partitions.end(), p);
    if (it == table.partitions.end())
        throw std::invalid_argument("central_idempotent: unknown partition");
    const std::size_t p_index = static_cast<std::size_t>(it - table.partitions.begin());
    const std::size_t f = table.rho[p_index][0].size();
    std::vector<Rational> target(table.perms.size(), Rational(0));
    const std::size_t offset = block_offset(table, p_index);
    for (std::size_t s = 0; s < f; ++s) target[offset + s * f + s] = Rational(1);
    return solve_for_target(table, target);
}

GroupAlgebraElement canonical_idempotent(const RepresentationTable& table,
                                         const StandardTableau& t) {
    const Partition shape = t.shape(table.n);
    const auto pit = std::find(table.partitions.begin(), table.partitions.end(), shape);
    if (pit == table.partitions.end())
        throw std::invalid_argument("canonical_idempotent: tableau size does not match table");
    const std::size_t p_index = static_cast<std::size_t>(pit - table.partitions.begin());
    const auto& tabs = table.tableaux[p_index];
    const auto tit = std::find(tabs.begin(), tabs.end(), t);
    if (tit == tabs.end())
        throw std::invalid_argument("canonical_idempotent: tableau not in basis order");
    const std::size_t pos = static_cast<std::size_t>(tit - tabs.begin());
    const std::size_t f = tabs.size();
    std::vector<Rational> target(table.perms.size(), Rational(0));
    target[block_offset(table, p_index) + pos * f + pos] = Rational(1);
    return solve_for_target(table, target);
}

GroupAlgebraElement frobenius_young_idempotent(const StandardTableau& t, int n) {
    if (t.size() != n)
        throw std::invalid_argument("frobenius_young_idempotent: tableau size mismatch");
    const auto& rows = t.rows();
    std::vector<std::vector<int>> cols(rows[0].size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);

    GroupAlgebraElement symmetrizer(n);
    for (const Permutation& r : block_stabilizer(rows, n)) symmetrizer.add_term(r, Rational(1));
    GroupAlgebraElement antisymmetrizer(n);
    for (const Permutation& c : block_stabilizer(cols, n))
        antisymmetrizer.add_term(c, Rational(c.sign()));

    long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    const Rational scale(hook_length_count(t.shape(n)), factorial);
    return (antisymmetrizer * symmetrizer).scaled(scale);
}

}  // namespace qhecke
