#include "qhecke/operators.hpp"

#include <stdexcept>

#include "qhecke/laurent.hpp"
#include "qhecke/qarith.hpp"

namespace qhecke {

namespace {

void check_slot(int i, const Ambient& amb) {
    if (i < 1 || i >= amb.n) throw std::invalid_argument("operator: slot index out of range");
}

void check_color(int i, const Ambient& amb) {
    if (i < 1 || i >= amb.d) throw std::invalid_argument("operator: color index out of range");
}

}  // namespace

TensorVector rbar_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_slot(i, amb);
    const RingElem q = RingElem::q_power(1);
    const RingElem qdiff = RingElem::q_power(1) - RingElem::q_power(-1);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries()) {
        const int a = w[static_cast<std::size_t>(i - 1)];
        const int b = w[static_cast<std::size_t>(i)];
        if (a == b) {
            out.add_term(w, c * q);
        } else {
            Word swapped = w;
            std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
            if (a < b) out.add_term(w, c * qdiff);
            out.add_term(swapped, c);
        }
    }
    return out;
}

TensorVector x_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_color(i, amb);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries()) {
        int prefix_weight = 0;  // weight_i of the strict prefix, updated on the walk
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == i + 1) {
                Word lowered = w;
                lowered[k] = i;
                out.add_term(lowered, c * RingElem::q_power(prefix_weight));
            }
            if (w[k] == i) ++prefix_weight;
            if (w[k] == i + 1) --prefix_weight;
        }
    }
    return out;
}

TensorVector y_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_color(i, amb);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries()) {
        int prefix_weight = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == i) {
                Word raised = w;
                raised[k] = i + 1;
                out.add_term(raised, c * RingElem::q_power(prefix_weight));
            }
            if (w[k] == i) ++prefix_weight;
            if (w[k] == i + 1) --prefix_weight;
        }
    }
    return out;
}

TensorVector k_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_color(i, amb);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries())
        out.add_term(w, c * RingElem::q_power(weight(w, i, amb.d)));
    return out;
}

TensorVector kinv_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_color(i, amb);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries())
        out.add_term(w, c * RingElem::q_power(-weight(w, i, amb.d)));
    return out;
}

TensorVector h_apply(int i, const TensorVector& v) {
    const Ambient amb = v.ambient();
    check_color(i, amb);
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries()) {
        const int m = weight(w, i, amb.d);
        out.add_term(w, c * RingElem(qnum(m, true).shifted(1)));  // q * m_{q^2}
    }
    return out;
}

TensorVector casimir_classical_apply(const TensorVector& v) {
    if (v.ambient().d != 2)
        throw std::invalid_argument("casimir_classical_apply: requires d = 2");
    for (const auto& [w, c] : v.entries()) {
        (void)w;
        if (!c.is_constant())
            throw std::invalid_argument("casimir_classical_apply: coefficients must be q-free");
    }
    TensorVector acc = v.scaled(RingElem(Rational(1, 2)));
    acc += h_apply(1, h_apply(1, v)).scaled(RingElem(Rational(1, 2)));
    acc += x_apply(1, y_apply(1, v));
    acc += y_apply(1, x_apply(1, v));
    return acc.specialize_q1();
}

TensorVector casimir_quantized_apply(const TensorVector& v) {
    if (v.ambient().d != 2)
        throw std::invalid_argument("casimir_quantized_apply: requires d = 2");
    const RingElem q = RingElem::q_power(1);
    const RingElem qinv = RingElem::q_power(-1);
    const RingElem prefactor = ((q - qinv) * (q - qinv)).inverse();
    TensorVector bracket = k_apply(1, v).scaled(q);
    bracket += kinv_apply(1, v).scaled(qinv);
    bracket -= v.scaled(RingElem(2));
    TensorVector out = bracket.scaled(prefactor);
    out += kinv_apply(1, y_apply(1, x_apply(1, v))).scaled(qinv);
    return out;
}

TensorVector perm_apply(const Permutation& sigma, const TensorVector& v) {
    const Ambient amb = v.ambient();
    if (sigma.degree() != amb.n) throw std::invalid_argument("perm_apply: degree mismatch");
    TensorVector out(amb);
    for (const auto& [w, c] : v.entries()) {
        Word moved(w.size());
        for (std::size_t j = 0; j < w.size(); ++j)
            moved[static_cast<std::size_t>(sigma(static_cast<int>(j) + 1) - 1)] = w[j];
        out.add_term(moved, c);
    }
    return out;
}

TensorVector apply_Tw(const Permutation& w, const TensorVector& v) {
    if (w.degree() != v.ambient().n) throw std::invalid_argument("apply_Tw: degree mismatch");
    const std::vector<int> word = w.reduced_word();
    TensorVector acc = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = rbar_apply(*it, acc);
    return acc;
}

}  // namespace qhecke
