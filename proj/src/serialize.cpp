#include "qhecke/serialize.hpp"

#include <stdexcept>

#include "json.hpp"
#include "qhecke/idempotents.hpp"

namespace qhecke {

namespace {

using ordered_json = nlohmann::ordered_json;

RingElem specialize(const RingElem& c, const QSpec& q) {
    switch (q.mode) {
        case QSpec::Mode::classical:
            return RingElem(c.limit_q1());
        case QSpec::Mode::rational:
            return c.evaluate(q.value);
        case QSpec::Mode::symbolic:
            break;
    }
    return c;
}

ordered_json tensor_vector_node(const TensorVector& v, const QSpec& q) {
    ordered_json terms = ordered_json::array();
    for (const auto& [word, coeff] : v.entries()) {
        ordered_json term;
        term["word"] = word;
        term["coeff"] = specialize(coeff, q).to_string();
        terms.push_back(std::move(term));
    }
    return terms;
}

ordered_json tableau_node(const StandardTableau& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

ordered_json group_element_node(const GroupAlgebraElement& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [perm, coeff] : a.terms()) {
        ordered_json term;
        ordered_json one_line = ordered_json::array();
        for (int k = 1; k <= perm.degree(); ++k) one_line.push_back(perm(k));
        term["perm"] = std::move(one_line);
        term["coeff"] = coeff.to_string();
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace

std::string tensor_vector_json(const TensorVector& v) {
    return tensor_vector_node(v, QSpec::symbolic()).dump(2);
}

std::string basis_json(const Partition& p, const QSpec& q) {
    const std::vector<BasisEntry> basis = build_basis(p);
    ordered_json out;
    out["partition"] = p.parts();
    ordered_json tabs = ordered_json::array();
    ordered_json vecs = ordered_json::array();
    ordered_json norm_strings = ordered_json::array();
    for (const BasisEntry& e : basis) {
        tabs.push_back(tableau_node(e.tableau));
        vecs.push_back(tensor_vector_node(e.vector, q));
        norm_strings.push_back(specialize(inner_product(e.vector, e.vector), q).to_string());
    }
    out["tableaux"] = std::move(tabs);
    out["vectors"] = std::move(vecs);
    out["norms"] = std::move(norm_strings);
    out["all_units"] = all_unit(p, p.total());
    return out.dump(2);
}

std::string idempotents_json(int n) {
    const RepresentationTable table = rep_table(n);
    ordered_json out;
    out["n"] = n;

    ordered_json central = ordered_json::array();
    for (const Partition& p : table.partitions) {
        ordered_json entry;
        entry["partition"] = p.parts();
        entry["element"] = group_element_node(central_idempotent(table, p));
        central.push_back(std::move(entry));
    }
    out["central"] = std::move(central);

    ordered_json canonical = ordered_json::array();
    ordered_json frobenius_young = ordered_json::array();
    for (std::size_t pi = 0; pi < table.partitions.size(); ++pi)
        for (const StandardTableau& t : table.tableaux[pi]) {
            ordered_json entry;
            entry["tableau"] = tableau_node(t);
            entry["element"] = group_element_node(canonical_idempotent(table, t));
            canonical.push_back(std::move(entry));

            ordered_json fy_entry;
            fy_entry["tableau"] = tableau_node(t);
            fy_entry["element"] = group_element_node(frobenius_young_idempotent(t, n));
            frobenius_young.push_back(std::move(fy_entry));
        }
    out["canonical"] = std::move(canonical);
    out["frobenius_young"] = std::move(frobenius_young);
    return out.dump(2);
}

}  // namespace qhecke
