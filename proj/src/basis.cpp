#include "qhecke/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhecke/operators.hpp"
#include "qhecke/qarith.hpp"

namespace qhecke {

namespace {

int part_of(const std::vector<int>& parts, int r) {
    return r >= 1 && r <= static_cast<int>(parts.size())
               ? parts[static_cast<std::size_t>(r - 1)]
               : 0;
}

void check_depth(int r, int i, const TensorVector& v) {
    if (r < 1 || i < 0 || i > r - 1)
        throw std::invalid_argument("raising operator: depth out of range");
    if (r > v.ambient().d)
        throw std::invalid_argument("raising operator: row exceeds alphabet size");
}

// Phat_i against raw target parts (not necessarily non-increasing).
TensorVector phat_raw(const std::vector<int>& parts, int r, int i, const TensorVector& v) {
    if (i == 0) return v;
    if (i == 1) return y_apply(r - 1, v);
    const int a = part_of(parts, r - i + 1) - part_of(parts, r) + i;
    const RingElem ca = RingElem(qnum(a, true));
    const RingElem cb = RingElem(qnum(a - 1, true).shifted(1));  // q (a-1)_{q^2}
    TensorVector out = y_apply(r - i, phat_raw(parts, r, i - 1, v)).scaled(ca);
    out -= phat_raw(parts, r, i - 1, y_apply(r - i, v)).scaled(cb);
    return out;
}

// The normalizing bracket product for P_i; false when a factor vanishes.
bool p_i_scale(const std::vector<int>& parts, int r, int i, RingElem& scale) {
    RingElem denom(1);
    for (int j = 1; j <= i; ++j) {
        const int b = part_of(parts, r - j) - part_of(parts, r) + j;
        if (b == 0) return false;
        denom = denom * RingElem(qnum(b, true));
    }
    scale = RingElem::q_power(-i) * denom.inverse();
    if (i % 2 != 0) scale = -scale;
    return true;
}

TensorVector p_i_raw(const std::vector<int>& parts, int r, int i, const TensorVector& v) {
    RingElem scale(0);
    if (!p_i_scale(parts, r, i, scale)) return TensorVector(v.ambient());
    return phat_raw(parts, r, i, v).scaled(scale);
}

TensorVector p_morphism_raw(const std::vector<int>& target, int r, const TensorVector& v) {
    const Ambient amb = v.ambient();
    const Ambient out_amb{amb.n + 1, amb.d};
    if (r < 1 || r > amb.d)
        throw std::invalid_argument("single-box morphism: row exceeds alphabet size");
    // the degenerate convention: any vanishing bracket kills the whole morphism
    RingElem scale(0);
    if (!p_i_scale(target, r, r - 1, scale)) return TensorVector(out_amb);
    TensorVector out(out_amb);
    for (int i = 0; i <= r - 1; ++i)
        out += prepend_letter(r - i, p_i_raw(target, r, i, v));
    return out;
}

}  // namespace

TensorVector phat_apply(const Partition& p, int r, int i, const TensorVector& v) {
    check_depth(r, i, v);
    return phat_raw(p.parts(), r, i, v);
}

TensorVector p_i_apply(const Partition& p, int r, int i, const TensorVector& v) {
    check_depth(r, i, v);
    return p_i_raw(p.parts(), r, i, v);
}

TensorVector p_morphism_apply(const Partition& p_from, const Partition& p_to,
                              const TensorVector& v) {
    if (p_from.length() != p_to.length())
        throw std::invalid_argument("single-box morphism: partition lengths differ");
    int r = 0;
    for (int k = 1; k <= p_from.length(); ++k) {
        if (p_to.part(k) == p_from.part(k)) continue;
        if (p_to.part(k) == p_from.part(k) + 1 && r == 0) {
            r = k;
            continue;
        }
        r = -1;
        break;
    }
    if (r <= 0)
        throw std::invalid_argument(
            "single-box morphism: partitions not related by a single-place increment");
    if (v.ambient().n != p_from.total() || v.ambient().d != p_from.length())
        throw std::invalid_argument("single-box morphism: ambient mismatch");
    return p_morphism_raw(p_to.parts(), r, v);
}

TensorVector p_morphism_apply(const Partition& p_from, int r, const TensorVector& v) {
    if (v.ambient().n != p_from.total() || v.ambient().d != p_from.length())
        throw std::invalid_argument("single-box morphism: ambient mismatch");
    std::vector<int> target = p_from.parts();
    if (r < 1 || r > static_cast<int>(target.size()))
        throw std::invalid_argument("single-box morphism: row out of range");
    ++target[static_cast<std::size_t>(r - 1)];
    return p_morphism_raw(target, r, v);
}

std::vector<BasisEntry> build_basis(const Partition& p) {
    const int d = p.length();
    std::vector<BasisEntry> out;
    for (const GeneratingSequence& s : enumerate_sequences(p)) {
        TensorVector v = TensorVector::unit(d);
        std::vector<int> counts(static_cast<std::size_t>(d), 0);
        for (int j = s.size(); j >= 1; --j) {
            const int r = s.rows()[static_cast<std::size_t>(j - 1)];
            const Partition from(counts);
            ++counts[static_cast<std::size_t>(r - 1)];
            v = p_morphism_apply(from, Partition(counts), v);
        }
        out.push_back(BasisEntry{seq_to_tableau(s), v});
    }
    std::sort(out.begin(), out.end(), [](const BasisEntry& a, const BasisEntry& b) {
        return a.tableau < b.tableau;
    });
    return out;
}

std::vector<RingElem> norms(const std::vector<BasisEntry>& basis) {
    std::vector<RingElem> out;
    out.reserve(basis.size());
    for (const BasisEntry& e : basis) out.push_back(inner_product(e.vector, e.vector));
    return out;
}

std::vector<RingElem> norms(const Partition& p) { return norms(build_basis(p)); }

bool all_unit(const Partition& p, int n) {
    for (const RingElem& norm : norms(p))
        if (!is_unit(norm, n)) return false;
    return true;
}

int kernel_dimension_oracle(const Partition& p, const Rational& q0) {
    const int n = p.total();
    const int d = p.length();
    if (q0 == Rational(0)) throw std::invalid_argument("kernel oracle: q0 must be nonzero");
    if (n >= 1 && qfactorial(n).evaluate(q0) == Rational(0))
        throw std::invalid_argument("kernel oracle: q0 is a root of the q-factorial");
    const std::vector<Word> source = words_of_multidegree(p.parts());
    const Ambient amb{n, d};

    QMatrix stacked;
    for (int i = 1; i < d; ++i) {
        if (p.part(i + 1) == 0) continue;  // no letter to lower: X_i vanishes here
        std::vector<int> target_mdeg = p.parts();
        ++target_mdeg[static_cast<std::size_t>(i - 1)];
        --target_mdeg[static_cast<std::size_t>(i)];
        const std::vector<Word> target = words_of_multidegree(target_mdeg);
        std::map<Word, std::size_t> index;
        for (std::size_t k = 0; k < target.size(); ++k) index[target[k]] = k;

        const std::size_t base = stacked.size();
        stacked.resize(base + target.size(),
                       std::vector<Rational>(source.size(), Rational(0)));
        for (std::size_t col = 0; col < source.size(); ++col) {
            const TensorVector image =
                x_apply(i, TensorVector::monomial(amb, source[col])).evaluate(q0);
            for (const auto& [w, c] : image.entries())
                stacked[base + index.at(w)][col] = c.as_rational();
        }
    }
    if (stacked.empty()) return static_cast<int>(source.size());
    return static_cast<int>(source.size() - rank(stacked));
}

std::map<int, RingMatrix> rep_matrices(const Partition& p) {
    const std::vector<BasisEntry> basis = build_basis(p);
    const std::vector<RingElem> norm = norms(basis);
    const std::size_t f = basis.size();
    const int n = p.total();
    std::map<int, RingMatrix> out;
    for (int i = 1; i < n; ++i) {
        RingMatrix m(f, std::vector<RingElem>(f, RingElem(0)));
        for (std::size_t t = 0; t < f; ++t) {
            TensorVector image = rbar_apply(i, basis[t].vector);
            for (std::size_t s = 0; s < f; ++s) {
                m[s][t] = inner_product(image, basis[s].vector) * norm[s].inverse();
                image -= basis[s].vector.scaled(m[s][t]);
            }
            if (!image.is_zero())
                throw std::logic_error("rep_matrices: generator image escaped the basis span");
        }
        out.emplace(i, std::move(m));
    }
    return out;
}

std::vector<QMatrix> extend_generators(const std::vector<QMatrix>& gens, int n) {
    if (static_cast<int>(gens.size()) != n - 1)
        throw std::invalid_argument("extend_generators: need one matrix per generator");
    const std::size_t f = gens.empty() ? 1 : gens[0].size();
    std::vector<QMatrix> out;
    for (const Permutation& w : Permutation::all(n)) {
        QMatrix m = q_identity(f);
        for (int i : w.reduced_word()) m = multiply(m, gens[static_cast<std::size_t>(i - 1)]);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::vector<QMatrix> rep_at(const Partition& p, const Rational& q0) {
    const int n = p.total();
    std::vector<QMatrix> gens;
    if (n >= 2) {
        const std::map<int, RingMatrix> symbolic = rep_matrices(p);
        for (int i = 1; i < n; ++i) gens.push_back(evaluate(symbolic.at(i), q0));
    }
    return extend_generators(gens, n);
}

}  // namespace

bool spans_full_algebra(const Partition& p, const Rational& q0) {
    const std::vector<QMatrix> reps = rep_at(p, q0);
    const std::size_t f = reps[0].size();
    QMatrix flat;
    for (const QMatrix& m : reps) {
        std::vector<Rational> row;
        row.reserve(f * f);
        for (const auto& r : m) row.insert(row.end(), r.begin(), r.end());
        flat.push_back(std::move(row));
    }
    return rank(flat) == f * f;
}

int joint_rep_rank(int n, const Rational& q0) {
    std::vector<std::vector<QMatrix>> blocks;
    std::size_t width = 0;
    for (const Partition& p : Partition::all(n, n)) {
        blocks.push_back(rep_at(p, q0));
        width += blocks.back()[0].size() * blocks.back()[0].size();
    }
    QMatrix flat;
    const std::size_t group_order = blocks[0].size();
    for (std::size_t w = 0; w < group_order; ++w) {
        std::vector<Rational> row;
        row.reserve(width);
        for (const auto& block : blocks)
            for (const auto& r : block[w]) row.insert(row.end(), r.begin(), r.end());
        flat.push_back(std::move(row));
    }
    return static_cast<int>(rank(flat));
}

}  // namespace qhecke
