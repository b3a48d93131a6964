#include "qhecke/linalg.hpp"

#include <map>
#include <stdexcept>

#include "qhecke/laurent.hpp"

namespace qhecke {

namespace {

using LMatrix = std::vector<std::vector<LaurentPoly>>;

// Clears denominators row by row (multiplying a row by a nonzero scalar
// function of q changes neither rank nor nullspace).
LMatrix clear_rows(const RingMatrix& m) {
    LMatrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        LaurentPoly common(1);
        for (const auto& e : m[r]) {
            if (e.is_zero()) continue;
            const LaurentPoly& den = e.denominator();
            const LaurentPoly g = LaurentPoly::gcd(common, den);
            LaurentPoly quo;
            if (!LaurentPoly::try_divide(den, g, quo))
                throw std::logic_error("clear_rows: gcd division failed");
            common = common * quo;
        }
        out[r].reserve(m[r].size());
        for (const auto& e : m[r]) {
            if (e.is_zero()) {
                out[r].emplace_back();
                continue;
            }
            LaurentPoly quo;
            if (!LaurentPoly::try_divide(common, e.denominator(), quo))
                throw std::logic_error("clear_rows: inexact row clearing");
            out[r].push_back(e.numerator() * quo);
        }
    }
    return out;
}

struct Echelon {
    LMatrix m;
    std::vector<std::size_t> pivot_rows;  // in elimination order
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free row echelon form. After step k every new entry is the exact
// quotient of a 2x2 minor-product by the previous pivot (Bareiss), so entries
// stay polynomial-sized. Pivot choice: smallest exponent spread, then fewest
// terms.
Echelon echelon(LMatrix a) {
    Echelon ech;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    LaurentPoly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (best == rows) {
                best = i;
                continue;
            }
            const auto key = [&](std::size_t row) {
                return std::make_pair(a[row][c].width(), a[row][c].terms().size());
            };
            if (key(i) < key(best)) best = i;
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const LaurentPoly pivot = a[r][c];
        // Rows with a zero in the pivot column still get the full update:
        // the scaling by pivot/prev keeps later Bareiss divisions exact.
        for (std::size_t i = r + 1; i < rows; ++i) {
            const LaurentPoly factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                LaurentPoly t = pivot * a[i][j] - factor * a[r][j];
                LaurentPoly quo;
                if (!LaurentPoly::try_divide(t, prev, quo))
                    throw std::logic_error("echelon: Bareiss division failed");
                a[i][j] = quo;
            }
        }
        prev = pivot;
        ech.pivot_rows.push_back(r);
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.m = std::move(a);
    return ech;
}

}  // namespace

std::size_t rank(const RingMatrix& m) { return echelon(clear_rows(m)).pivot_cols.size(); }

std::vector<std::vector<RingElem>> nullspace(const RingMatrix& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const Echelon ech = echelon(clear_rows(m));
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<RingElem>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<RingElem> v(cols);
        v[fc] = RingElem(1);
        for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
            const std::size_t pr = ech.pivot_rows[k];
            const std::size_t pc = ech.pivot_cols[k];
            RingElem acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (v[j].is_zero() || ech.m[pr][j].is_zero()) continue;
                acc += RingElem(ech.m[pr][j]) * v[j];
            }
            v[pc] = -acc / RingElem(ech.m[pr][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RingMatrix ring_identity(std::size_t n) {
    RingMatrix m(n, std::vector<RingElem>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RingElem(1);
    return m;
}

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("multiply: shape mismatch");
    RingMatrix r(a.size(), std::vector<RingElem>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

QMatrix evaluate(const RingMatrix& m, const Rational& q0) {
    QMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& e : m[i]) r[i].push_back(e.is_zero() ? Rational(0) : e.evaluate(q0));
    }
    return r;
}

namespace {

struct QEchelon {
    QMatrix m;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

QEchelon q_echelon(QMatrix a) {
    QEchelon ech;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                best = i;
                break;
            }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const Rational inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ech.pivot_rows.push_back(r);
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.m = std::move(a);
    return ech;
}

}  // namespace

std::size_t rank(const QMatrix& m) { return q_echelon(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const QEchelon ech = q_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
            const std::size_t pr = ech.pivot_rows[k];
            const std::size_t pc = ech.pivot_cols[k];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero() && !ech.m[pr][j].is_zero()) acc += ech.m[pr][j] * v[j];
            v[pc] = -acc;  // pivot normalized to 1 during elimination
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix q_identity(std::size_t n) {
    QMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("multiply: shape mismatch");
    QMatrix r(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw std::invalid_argument("inverse: not square");
    QMatrix a = m;
    QMatrix inv = q_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const Rational f = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const Rational g = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

std::vector<Rational> apply(const QMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("apply: shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    }
    return out;
}

RingMatrix operator_matrix(const std::function<TensorVector(const TensorVector&)>& op,
                           const std::vector<Word>& basis, Ambient amb) {
    std::map<Word, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
    RingMatrix m(basis.size(), std::vector<RingElem>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const TensorVector image = op(TensorVector::monomial(amb, basis[j]));
        for (const auto& [w, c] : image.entries()) {
            auto it = index.find(w);
            if (it == index.end())
                throw std::domain_error("operator_matrix: image leaves the basis span");
            m[it->second][j] = c;
        }
    }
    return m;
}

}  // namespace qhecke
