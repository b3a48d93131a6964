// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Exits 0 only when every criterion passes. argv[1] names the directory
// holding the golden files (byte-exact reference outputs).
//
// Criteria with a pinned wall-clock budget fail when they run over it, even
// if the mathematics checks out.

#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qhecke/basis.hpp"
#include "qhecke/dfreport.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/idempotents.hpp"
#include "qhecke/linalg.hpp"
#include "qhecke/operators.hpp"
#include "qhecke/permutation.hpp"
#include "qhecke/qarith.hpp"
#include "qhecke/rotation.hpp"
#include "qhecke/serialize.hpp"
#include "qhecke/tableau.hpp"
#include "qhecke/tensor_vector.hpp"
#include "qhecke/verify.hpp"

using namespace qhecke;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string g_golden_dir;

Outcome from_suites(const std::vector<std::string>& suites, const VerifyOptions& opt) {
    for (const std::string& name : suites) {
        const SuiteResult result = run_suite(name, opt);
        for (const CheckResult& check : result.checks)
            if (!check.passed) return {false, name + ": " + check.name};
    }
    return {true, ""};
}

TensorVector mono(Ambient amb, const Word& w, const RingElem& c = RingElem(1)) {
    return TensorVector::monomial(amb, w, c);
}

// 1. defining relations of the deformed group action at desk scale
Outcome criterion1() {
    VerifyOptions opt;
    opt.n = 4;
    opt.d = 3;
    return from_suites({"braid", "hecke"}, opt);
}

// 2. the two-letter action matrix, entry by entry
Outcome criterion2() {
    const Ambient amb{2, 2};
    const auto words = all_words(2, 2);  // (1,1) (1,2) (2,1) (2,2)
    const RingMatrix m = operator_matrix(
        [](const TensorVector& v) { return rbar_apply(1, v); }, words, amb);
    const RingElem q = RingElem::q_power(1);
    const RingElem qd = q - RingElem::q_power(-1);
    const RingElem z(0), one(1);
    const RingMatrix expected = {{q, z, z, z}, {z, qd, one, z}, {z, one, z, z}, {z, z, z, q}};
    if (m != expected) return {false, "matrix differs from the display"};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (m[a][b] != m[b][a]) return {false, "matrix is not symmetric"};
    return {true, ""};
}

// 3. the action commutes with the quantized enveloping operators, which obey
// their own coproduct identities
Outcome criterion3() {
    VerifyOptions opt;
    opt.n = 4;
    opt.d = 3;
    const Outcome base = from_suites({"commutant", "qcommute"}, opt);
    if (!base.ok) return base;
    const RingElem q = RingElem::q_power(1);
    const RingElem qinv = RingElem::q_power(-1);
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 3; ++d)
            for (const Word& w : all_words(n, d)) {
                const TensorVector m = mono({n, d}, w);
                for (int i = 1; i < d; ++i) {
                    TensorVector lhs = h_apply(i, m).scaled(qinv - q);
                    TensorVector rhs = m;
                    rhs -= k_apply(i, k_apply(i, m));
                    if (lhs != rhs) return {false, "H against 1 - K^2 fails"};
                    lhs = x_apply(i, y_apply(i, m)).scaled(q);
                    lhs -= y_apply(i, x_apply(i, m)).scaled(qinv);
                    if (lhs != h_apply(i, m)) return {false, "qXY - YX/q = H fails"};
                }
            }
    return {true, ""};
}

// 4. lowering a raised kernel vector returns a scalar multiple, and the
// raising chain terminates exactly at the expected length
Outcome criterion4() {
    VerifyOptions opt;
    opt.n = 4;
    return from_suites({"lemma34"}, opt);
}

// 5. the first nontrivial basis, classically: frozen vectors, norms, units
Outcome criterion5() {
    const Partition p({2, 1, 0});
    const auto basis = build_basis(p);
    if (basis.size() != 2) return {false, "expected 2 basis vectors"};

    const Ambient amb{3, 3};
    const Rational half(1, 2);
    TensorVector v1 = mono(amb, {2, 1, 1});
    v1 -= mono(amb, {1, 2, 1}, RingElem(half));
    v1 -= mono(amb, {1, 1, 2}, RingElem(half));
    TensorVector v2 = mono(amb, {1, 2, 1});
    v2 -= mono(amb, {1, 1, 2});

    const auto matches = [](const TensorVector& got, const TensorVector& want) {
        return got == want || got == want.scaled(RingElem(-1));
    };
    const TensorVector c0 = basis[0].vector.specialize_q1();
    const TensorVector c1 = basis[1].vector.specialize_q1();
    const bool vectors_match = (matches(c0, v1) && matches(c1, v2)) ||
                               (matches(c0, v2) && matches(c1, v1));
    if (!vectors_match) return {false, "classical vectors differ from the frozen pair"};

    std::vector<Rational> classical_norms;
    for (const RingElem& norm : norms(basis)) classical_norms.push_back(norm.limit_q1());
    const Rational three_half(3, 2), two(2);
    const bool norms_match =
        (classical_norms[0] == three_half && classical_norms[1] == two) ||
        (classical_norms[0] == two && classical_norms[1] == three_half);
    if (!norms_match) return {false, "classical norms differ from {3/2, 2}"};

    for (const Rational& norm : classical_norms)
        for (mpz_class v : {norm.num(), norm.den()}) {
            mpz_class rest = abs(v);
            for (long f = 2; f <= 3; ++f)
                while (rest % f == 0) rest /= f;
            if (rest != 1) return {false, "norm is not a unit once 3! is inverted"};
        }
    if (!all_unit(p, 3)) return {false, "a symbolic norm fails the unit test"};
    return {true, ""};
}

// 6. for every shape: basis size, kernel-dimension oracle, and two
// independent tableau counts agree, and the squares sum to n!
Outcome criterion6() {
    for (int n = 2; n <= 5; ++n) {
        long sum_sq = 0;
        for (const Partition& p : Partition::all(n, n)) {
            const long f = static_cast<long>(build_basis(p).size());
            if (kernel_dimension_oracle(p, Rational(7)) != f)
                return {false, "kernel oracle disagrees at " + p.to_string()};
            if (count_standard_tableaux_oracle(p) != f)
                return {false, "backtracking count disagrees at " + p.to_string()};
            if (hook_length_count(p) != f)
                return {false, "hook count disagrees at " + p.to_string()};
            sum_sq += f * f;
        }
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        if (sum_sq != factorial)
            return {false, "squares sum to " + std::to_string(sum_sq) + " at n=" +
                               std::to_string(n)};
    }
    return {true, ""};
}

// 7. pairwise orthogonality and unit norms across all shapes
Outcome criterion7() { return from_suites({"orthogonality", "norms"}, {}); }

// 8. each block acts as a full matrix ring and the blocks are jointly
// independent
Outcome criterion8() {
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& p : Partition::all(n, n))
            if (!spans_full_algebra(p, Rational(2)))
                return {false, "block fails to span at " + p.to_string()};
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        if (joint_rep_rank(n, Rational(2)) != factorial)
            return {false, "joint rank deficient at n=" + std::to_string(n)};
    }
    return {true, ""};
}

// 9. classical idempotents: resolution of the identity semantically, and the
// n=3 table byte-for-byte against the golden file
Outcome criterion9() {
    for (int n : {3, 4}) {
        const RepresentationTable table = rep_table(n);
        const GroupAlgebraElement one = GroupAlgebraElement::identity(n);

        std::vector<GroupAlgebraElement> central;
        for (const Partition& p : table.partitions)
            central.push_back(central_idempotent(table, p));
        GroupAlgebraElement central_sum(n);
        for (std::size_t a = 0; a < central.size(); ++a) {
            if (central[a] * central[a] != central[a])
                return {false, "central element is not idempotent"};
            for (std::size_t b = a + 1; b < central.size(); ++b)
                if (!(central[a] * central[b]).is_zero())
                    return {false, "central elements are not orthogonal"};
            central_sum += central[a];
        }
        if (central_sum != one) return {false, "central elements do not sum to 1"};

        GroupAlgebraElement total(n);
        std::vector<GroupAlgebraElement> all_canonical;
        for (std::size_t pi = 0; pi < table.partitions.size(); ++pi) {
            GroupAlgebraElement shape_sum(n);
            for (const StandardTableau& t : table.tableaux[pi]) {
                const GroupAlgebraElement c = canonical_idempotent(table, t);
                if (c * c != c) return {false, "canonical element is not idempotent"};
                all_canonical.push_back(c);
                shape_sum += c;
            }
            if (shape_sum != central[pi])
                return {false, "canonical elements do not refine the central one"};
            total += shape_sum;
        }
        for (std::size_t a = 0; a < all_canonical.size(); ++a)
            for (std::size_t b = a + 1; b < all_canonical.size(); ++b)
                if (!(all_canonical[a] * all_canonical[b]).is_zero())
                    return {false, "canonical elements are not orthogonal"};
        if (total != one) return {false, "canonical elements do not sum to 1"};
    }

    // the n = 3 displays, element by element
    {
        const RepresentationTable table = rep_table(3);
        const auto term = [](const char* cycles, const Rational& c) {
            return GroupAlgebraElement::basis(Permutation::parse(cycles, 3), c);
        };
        const Rational third(1, 3), half(1, 2);

        GroupAlgebraElement central_lit = term("e", Rational(2, 3));
        central_lit -= term("(1 2 3)", third);
        central_lit -= term("(1 3 2)", third);
        const GroupAlgebraElement e21 = central_idempotent(table, Partition({2, 1, 0}));
        if (e21 != central_lit) return {false, "central element differs from its display"};

        const GroupAlgebraElement half_plus = term("e", half) + term("(2 3)", half);
        const GroupAlgebraElement half_minus = term("e", half) - term("(2 3)", half);
        const StandardTableau t0({{1, 2}, {3}});
        const StandardTableau t1({{1, 3}, {2}});
        const GroupAlgebraElement c0 = canonical_idempotent(table, t0);
        const GroupAlgebraElement c1 = canonical_idempotent(table, t1);
        if (c0 != half_plus * e21 || c1 != half_minus * e21)
            return {false, "canonical elements differ from their displays"};

        GroupAlgebraElement fy0_lit = term("e", third) + term("(1 2)", third);
        fy0_lit -= term("(1 3)", third);
        fy0_lit -= term("(1 2 3)", third);
        GroupAlgebraElement fy1_lit = term("e", third) + term("(1 3)", third);
        fy1_lit -= term("(1 2)", third);
        fy1_lit -= term("(1 3 2)", third);
        const GroupAlgebraElement fy0 = frobenius_young_idempotent(t0, 3);
        const GroupAlgebraElement fy1 = frobenius_young_idempotent(t1, 3);
        if (fy0 != fy0_lit || fy1 != fy1_lit)
            return {false, "symmetrizer elements differ from their displays"};
        if (fy0 == c0 || fy1 == c1)
            return {false, "symmetrizer elements should differ from the canonical ones"};
        if (fy0 + fy1 != c0 + c1 || fy0 + fy1 != e21)
            return {false, "shape sums disagree"};
    }

    std::ifstream in(g_golden_dir + "/idempotents_n3.json", std::ios::binary);
    if (!in) return {false, "cannot open golden file in " + g_golden_dir};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str() != idempotents_json(3) + "\n")
        return {false, "n=3 table differs from the golden bytes"};
    return {true, ""};
}

// 10. casimir spectra, centrality, self-adjointness, and the classical limit
Outcome criterion10() { return from_suites({"casimir"}, {}); }

// 11. the trigonometric conjugation identity, within 1e-9
Outcome criterion11() {
    for (double t : {0.1, 0.25}) {
        const double residual = rotation_check(t);
        if (!(residual <= 1e-9)) {
            std::ostringstream os;
            os << std::scientific << std::setprecision(3) << "residual " << residual
               << " at t=" << t;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

// 12. modular data: finite valuations with unit leading terms, frozen sample
// rows, the classical fiber, and faithfulness at sample points
Outcome criterion12() {
    for (int n = 2; n <= 7; ++n) {
        const ValuationReport report = df_report(n);
        if (!report.no_rational_prime) return {false, "a valuation came back infinite"};
        for (const ValuationRow& row : report.rows) {
            if (row.valuation < 0) return {false, "negative valuation"};
            if (row.leading_coeff < 1 || row.leading_coeff >= row.prime)
                return {false, "leading coefficient is not a unit mod p"};
            if ((row.valuation == 0) != (row.i % row.prime != 0))
                return {false, "valuation vanishes exactly off the divisible indices"};
        }
    }
    const std::vector<std::tuple<int, long, int, long>> frozen = {
        {2, 2, 2, 1}, {3, 3, 2, 1}, {2, 3, 0, 2}, {4, 2, 6, 1}};
    for (const auto& [i, prime, val, lead] : frozen) {
        const auto row = valuation_row(i, prime);
        if (row.first != val || row.second != lead)
            return {false, "frozen valuation differs at i=" + std::to_string(i) + " p=" +
                               std::to_string(prime)};
    }
    for (int n = 2; n <= 4; ++n)
        if (!deformation_fiber_check(n))
            return {false, "classical fiber fails at n=" + std::to_string(n)};
    if (!faithfulness_check(2, Rational(5))) return {false, "faithfulness fails at n=2"};
    if (!faithfulness_check(3, Rational(2))) return {false, "faithfulness fails at n=3"};
    if (!faithfulness_check(4, Rational(2))) return {false, "faithfulness fails at n=4"};
    return {true, ""};
}

struct Criterion {
    std::string label;
    std::function<Outcome()> run;
    double wall_limit = 0;  // seconds; 0 = unlimited
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance GOLDEN_DIR\n";
        return 2;
    }
    g_golden_dir = argv[1];

    const std::vector<Criterion> criteria = {
        {"defining relations (braid, quadratic) for n<=4, d<=3", criterion1, 10.0},
        {"two-letter action matrix matches the display", criterion2},
        {"commutant and coproduct identities for n<=4, d<=3", criterion3},
        {"lowering/raising ladder identities for n<=4", criterion4},
        {"classical basis, norms, and units for the (2,1) shape", criterion5},
        {"basis sizes match both oracles and fill n! for n<=5", criterion6, 120.0},
        {"orthogonality and unit norms for n<=5", criterion7},
        {"full matrix rings and joint block independence for n<=4", criterion8},
        {"idempotent resolutions for n=3,4 and the golden n=3 table", criterion9},
        {"casimir spectra, centrality, and the classical limit", criterion10},
        {"trigonometric conjugation identity within 1e-9", criterion11, 1.0},
        {"modular valuations, classical fiber, and faithfulness", criterion12},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[k].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && criteria[k].wall_limit > 0 && seconds > criteria[k].wall_limit) {
            outcome.ok = false;
            std::ostringstream os;
            os << std::fixed << std::setprecision(1) << "wall clock " << seconds
               << "s exceeds the " << criteria[k].wall_limit << "s budget";
            outcome.detail = os.str();
        }
        std::ostringstream line;
        line << (outcome.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": "
             << criteria[k].label;
        if (!outcome.ok && !outcome.detail.empty()) line << " (" << outcome.detail << ")";
        line << std::fixed << std::setprecision(2) << " [" << seconds << "s]";
        std::cout << line.str() << "\n";
        if (!outcome.ok) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
