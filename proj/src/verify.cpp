#include "qhecke/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qhecke/basis.hpp"
#include "qhecke/linalg.hpp"
#include "qhecke/operators.hpp"
#include "qhecke/qarith.hpp"
#include "qhecke/rotation.hpp"

namespace qhecke {

bool SuiteResult::all_passed() const {
    if (checks.empty()) return false;
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

long count_standard_tableaux_oracle(const Partition& p) {
    const int n = p.total();
    std::vector<int> filled(static_cast<std::size_t>(p.length()), 0);
    std::function<long(int)> place = [&](int done) -> long {
        if (done == n) return 1;
        long total = 0;
        for (int r = 1; r <= p.length(); ++r) {
            const std::size_t k = static_cast<std::size_t>(r - 1);
            if (filled[k] >= p.part(r)) continue;
            if (r > 1 && filled[k] >= filled[k - 1]) continue;
            ++filled[k];
            total += place(done + 1);
            --filled[k];
        }
        return total;
    };
    return place(0);
}

namespace {

int env_threads() {
    const char* env = std::getenv("QHECKE_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

// Applies fn to every partition, in waves of QHECKE_THREADS when that is set;
// results keep partition order regardless.
template <class R>
std::vector<R> over_partitions(const std::vector<Partition>& parts,
                               const std::function<R(const Partition&)>& fn) {
    std::vector<R> out(parts.size());
    const int budget = env_threads();
    if (budget <= 1) {
        for (std::size_t k = 0; k < parts.size(); ++k) out[k] = fn(parts[k]);
        return out;
    }
    std::size_t next = 0;
    while (next < parts.size()) {
        const std::size_t wave =
            std::min(static_cast<std::size_t>(budget), parts.size() - next);
        std::vector<std::future<R>> futures;
        futures.reserve(wave);
        for (std::size_t k = 0; k < wave; ++k)
            futures.push_back(std::async(std::launch::async, fn, parts[next + k]));
        for (std::size_t k = 0; k < wave; ++k) out[next + k] = futures[k].get();
        next += wave;
    }
    return out;
}

std::string size_tag(int n, int d) {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

TensorVector mono(Ambient amb, const Word& w) { return TensorVector::monomial(amb, w); }

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - j + 1) / j;
    return out;
}

bool matrix_symmetric(const RingMatrix& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (m[a][b] != m[b][a]) return false;
    return true;
}

std::vector<CheckResult> suite_braid(int nmax, int dmax) {
    std::vector<CheckResult> out;
    for (int n = 3; n <= nmax; ++n)
        for (int d = 1; d <= dmax; ++d) {
            bool ok = true;
            std::string detail;
            const Ambient amb{n, d};
            for (const Word& w : all_words(n, d)) {
                const TensorVector m = mono(amb, w);
                for (int i = 1; i + 1 < n && ok; ++i)
                    if (rbar_apply(i, rbar_apply(i + 1, rbar_apply(i, m))) !=
                        rbar_apply(i + 1, rbar_apply(i, rbar_apply(i + 1, m)))) {
                        ok = false;
                        detail = "braid triple fails at i=" + std::to_string(i);
                    }
                for (int i = 1; i < n && ok; ++i)
                    for (int j = i + 2; j < n && ok; ++j)
                        if (rbar_apply(i, rbar_apply(j, m)) !=
                            rbar_apply(j, rbar_apply(i, m))) {
                            ok = false;
                            detail = "distant generators fail to commute";
                        }
                if (!ok) break;
            }
            out.push_back({"braid and distant commutation, " + size_tag(n, d), ok, detail});
        }
    return out;
}

std::vector<CheckResult> suite_hecke(int nmax, int dmax) {
    std::vector<CheckResult> out;
    const RingElem qdiff = RingElem::q_power(1) - RingElem::q_power(-1);
    for (int n = 2; n <= nmax; ++n)
        for (int d = 1; d <= dmax; ++d) {
            bool ok = true;
            const Ambient amb{n, d};
            for (const Word& w : all_words(n, d)) {
                const TensorVector m = mono(amb, w);
                for (int i = 1; i < n && ok; ++i) {
                    TensorVector quad = rbar_apply(i, rbar_apply(i, m));
                    quad -= rbar_apply(i, m).scaled(qdiff);
                    if (quad != m) ok = false;
                }
                if (!ok) break;
            }
            out.push_back({"quadratic relation, " + size_tag(n, d), ok, ""});
        }

    // the two-letter action table, verbatim
    const Ambient amb{2, 2};
    bool table = rbar_apply(1, mono(amb, {1, 1})) == mono(amb, {1, 1}).scaled(RingElem::q_power(1));
    table = table &&
            rbar_apply(1, mono(amb, {2, 2})) == mono(amb, {2, 2}).scaled(RingElem::q_power(1));
    table = table && rbar_apply(1, mono(amb, {2, 1})) == mono(amb, {1, 2});
    TensorVector mixed = mono(amb, {1, 2}).scaled(qdiff);
    mixed += mono(amb, {2, 1});
    table = table && rbar_apply(1, mono(amb, {1, 2})) == mixed;
    out.push_back({"two-letter action table", table, ""});
    return out;
}

std::vector<CheckResult> suite_commutant(int nmax, int dmax) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= nmax; ++n)
        for (int d = 2; d <= dmax; ++d) {
            bool ok = true;
            const Ambient amb{n, d};
            for (const Word& w : all_words(n, d)) {
                const TensorVector m = mono(amb, w);
                for (int i = 1; i < n && ok; ++i)
                    for (int j = 1; j < d && ok; ++j) {
                        const TensorVector rm = rbar_apply(i, m);
                        if (x_apply(j, rm) != rbar_apply(i, x_apply(j, m))) ok = false;
                        if (y_apply(j, rm) != rbar_apply(i, y_apply(j, m))) ok = false;
                        if (k_apply(j, rm) != rbar_apply(i, k_apply(j, m))) ok = false;
                    }
                if (!ok) break;
            }
            out.push_back({"flip-matrix commutes with the quantized action, " + size_tag(n, d),
                           ok, ""});
        }
    return out;
}

std::vector<CheckResult> suite_qcommute(int nmax) {
    std::vector<CheckResult> out;
    const RingElem q = RingElem::q_power(1);
    for (int n = 1; n <= nmax; ++n) {
        bool ok = true;
        const Ambient amb{n, 3};
        for (const Word& w : all_words(n, 3)) {
            const TensorVector m = mono(amb, w);
            if (x_apply(1, y_apply(2, m)) != y_apply(2, x_apply(1, m)).scaled(q)) ok = false;
            if (x_apply(2, y_apply(1, m)) != y_apply(1, x_apply(2, m)).scaled(q)) ok = false;
            if (!ok) break;
        }
        out.push_back({"adjacent-color q-commutation, n=" + std::to_string(n) + " d=3", ok, ""});
    }
    return out;
}

std::vector<CheckResult> suite_lemma34(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        bool ok = true;
        std::string detail;
        for (int i = 0; 2 * i <= n && ok; ++i) {
            const Partition p({n - i, i});
            const int lambda = n - 2 * i;
            for (const BasisEntry& e : build_basis(p)) {
                TensorVector prev = e.vector;  // Y^{m-1} alpha
                for (int m = 1; m <= lambda + 1; ++m) {
                    const TensorVector cur = y_apply(1, prev);  // Y^m alpha
                    const RingElem scale =
                        RingElem::q_power(-2 * m + 2) * RingElem(qnum(lambda - m + 1, true)) *
                        RingElem(qnum(m, true));
                    if (x_apply(1, cur) != prev.scaled(scale)) {
                        ok = false;
                        detail = "commutation identity fails at shape " + p.to_string() +
                                 " m=" + std::to_string(m);
                        break;
                    }
                    prev = cur;
                }
                if (ok && !prev.is_zero()) {  // prev = Y^{lambda+1} alpha
                    ok = false;
                    detail = "annihilation fails at shape " + p.to_string();
                }
                if (!ok) break;
            }
        }
        out.push_back(
            {"lowering against raised kernel vectors, n=" + std::to_string(n), ok, detail});
    }
    return out;
}

bool basis_orthogonal(const Partition& p) {
    const auto basis = build_basis(p);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!inner_product(basis[a].vector, basis[b].vector).is_zero()) return false;
    return true;
}

bool basis_orthogonal_at(const Partition& p, const Rational& q0) {
    std::vector<TensorVector> vecs;
    for (const auto& e : build_basis(p)) vecs.push_back(e.vector.evaluate(q0));
    for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = a + 1; b < vecs.size(); ++b)
            if (!inner_product(vecs[a], vecs[b]).is_zero()) return false;
    return true;
}

CheckResult combine(const std::string& name, const std::vector<Partition>& parts,
                    const std::vector<std::pair<bool, std::string>>& results) {
    for (std::size_t k = 0; k < results.size(); ++k)
        if (!results[k].first)
            return {name, false, "fails at " + parts[k].to_string() +
                                     (results[k].second.empty() ? "" : ": " + results[k].second)};
    return {name, true, ""};
}

std::vector<CheckResult> suite_orthogonality(int nmax, const std::optional<Rational>& q0_opt) {
    std::vector<CheckResult> out;
    using PR = std::pair<bool, std::string>;
    for (int n = 2; n <= std::min(nmax, 4); ++n) {
        const auto parts = Partition::all(n, n);
        const auto results = over_partitions<PR>(parts, [](const Partition& p) -> PR {
            return {basis_orthogonal(p), ""};
        });
        out.push_back(combine("pairwise orthogonality (symbolic), n=" + std::to_string(n),
                              parts, results));
    }
    if (nmax >= 5) {
        std::vector<Rational> points = {Rational(2), Rational(3), Rational(5)};
        if (q0_opt) points = {*q0_opt};
        const auto parts = Partition::all(5, 5);
        for (const Rational& q0 : points) {
            const auto results = over_partitions<PR>(parts, [&q0](const Partition& p) -> PR {
                return {basis_orthogonal_at(p, q0), ""};
            });
            out.push_back(combine("pairwise orthogonality, n=5 at q=" + q0.to_string(), parts,
                                  results));
        }
    }
    return out;
}

std::vector<CheckResult> suite_norms(int nmax) {
    std::vector<CheckResult> out;
    using PR = std::pair<bool, std::string>;
    for (int n = 2; n <= nmax; ++n) {
        const auto parts = Partition::all(n, n);
        const auto results = over_partitions<PR>(parts, [n](const Partition& p) -> PR {
            if (!all_unit(p, n)) return {false, "non-unit norm"};
            for (const RingElem& norm : norms(p)) {
                const Rational at1 = norm.limit_q1();
                for (mpz_class v : {at1.num(), at1.den()}) {
                    mpz_class rest = abs(v);
                    for (long f = 2; f <= n; ++f)
                        while (rest % f == 0) rest /= f;
                    if (rest != 1) return {false, "classical norm has a large prime factor"};
                }
            }
            return {true, ""};
        });
        out.push_back(combine("unit norms, n=" + std::to_string(n), parts, results));
    }
    return out;
}

std::vector<CheckResult> suite_simplicity(int nmax, const Rational& oracle_q0) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= nmax; ++n) {
        const auto parts = Partition::all(n, n);
        using PR = std::pair<bool, long>;
        const auto results =
            over_partitions<PR>(parts, [&oracle_q0](const Partition& p) -> PR {
                const long f = static_cast<long>(build_basis(p).size());
                if (kernel_dimension_oracle(p, oracle_q0) != f) return {false, f};
                if (count_standard_tableaux_oracle(p) != f) return {false, f};
                return {true, f};
            });
        bool ok = true;
        long sum_sq = 0;
        for (const auto& [good, f] : results) {
            ok = ok && good;
            sum_sq += f * f;
        }
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        ok = ok && sum_sq == factorial;
        out.push_back({"basis rank equals both oracles and squares sum to n!, n=" +
                           std::to_string(n),
                       ok, "sum of squares = " + std::to_string(sum_sq)});
    }
    for (int n = 2; n <= std::min(nmax, 4); ++n) {
        const auto parts = Partition::all(n, n);
        const auto results = over_partitions<std::pair<bool, std::string>>(
            parts, [](const Partition& p) -> std::pair<bool, std::string> {
                return {spans_full_algebra(p, Rational(2)), ""};
            });
        out.push_back(
            combine("every block spans its full matrix ring at q=2, n=" + std::to_string(n),
                    parts, results));
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        const bool joint = joint_rep_rank(n, Rational(2)) == factorial;
        out.push_back({"joint representation separates the blocks, n=" + std::to_string(n),
                       joint, ""});
    }
    return out;
}

std::vector<CheckResult> suite_casimir(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        const Ambient amb{n, 2};
        const auto words = all_words(n, 2);
        const RingMatrix m = operator_matrix(
            [](const TensorVector& v) { return casimir_classical_apply(v); }, words, amb);
        bool ok = true;
        std::size_t total = 0;
        for (int r = n; r >= 0; r -= 2) {
            const int i = (n - r) / 2;
            const long mult = binomial(n, i) - binomial(n, i - 1);
            RingMatrix shifted = m;
            const RingElem lambda(Rational((r + 1) * (r + 1), 2));
            for (std::size_t a = 0; a < shifted.size(); ++a) shifted[a][a] -= lambda;
            const std::size_t nullity = nullspace(shifted).size();
            if (static_cast<long>(nullity) != mult * (r + 1)) ok = false;
            total += nullity;
        }
        ok = ok && total == words.size();
        out.push_back({"classical casimir spectrum on V^" + std::to_string(n), ok, ""});
    }

    {
        const Ambient amb{1, 2};
        const TensorVector x = mono(amb, {1});
        out.push_back({"quantized casimir fixes the single letter",
                       casimir_quantized_apply(x) == x, ""});
    }
    {
        const Ambient amb{3, 2};
        bool ok = true;
        for (const Word& w : all_words(3, 2)) {
            const TensorVector m = mono(amb, w);
            for (int i : {1, 2})
                if (casimir_quantized_apply(rbar_apply(i, m)) !=
                    rbar_apply(i, casimir_quantized_apply(m)))
                    ok = false;
        }
        const RingMatrix cm = operator_matrix(
            [](const TensorVector& v) { return casimir_quantized_apply(v); }, all_words(3, 2),
            amb);
        ok = ok && matrix_symmetric(cm);
        out.push_back({"quantized casimir is central and self-adjoint on V^3", ok, ""});
    }
    for (int n = 2; n <= std::min(nmax, 3); ++n) {
        const Ambient amb{n, 2};
        const auto words = all_words(n, 2);
        const RingMatrix quantized = operator_matrix(
            [](const TensorVector& v) { return casimir_quantized_apply(v); }, words, amb);
        const RingMatrix classical = operator_matrix(
            [](const TensorVector& v) { return casimir_classical_apply(v); }, words, amb);
        bool ok = true;
        for (std::size_t a = 0; a < quantized.size() && ok; ++a)
            for (std::size_t b = 0; b < quantized.size() && ok; ++b)
                if (quantized[a][b].limit_q1() !=
                    classical[a][b].as_rational() / Rational(2))
                    ok = false;
        out.push_back({"classical limit is half the classical casimir on V^" +
                           std::to_string(n),
                       ok, ""});
    }
    return out;
}

std::vector<CheckResult> suite_rotation(const std::optional<double>& t_opt) {
    std::vector<double> angles = {0.0, 0.1, 0.25};
    if (t_opt) angles = {*t_opt};
    std::vector<CheckResult> out;
    for (double t : angles) {
        const double residual = rotation_check(t);
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << "residual " << residual;
        std::ostringstream name;
        name << "conjugation identity at t=" << t;
        out.push_back({name.str(), residual <= 1e-9, os.str()});
    }
    return out;
}

std::vector<CheckResult> suite_selfadjoint(int nmax, int dmax) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= nmax; ++n)
        for (int d = 1; d <= dmax; ++d) {
            const Ambient amb{n, d};
            const auto words = all_words(n, d);
            bool ok = true;
            for (int i = 1; i < n && ok; ++i) {
                const RingMatrix m = operator_matrix(
                    [i](const TensorVector& v) { return rbar_apply(i, v); }, words, amb);
                ok = matrix_symmetric(m);
            }
            out.push_back({"generator matrices are symmetric, " + size_tag(n, d), ok, ""});
        }

    // transpose of a word operator is the operator of the inverse word
    {
        const Ambient amb{3, 2};
        const auto words = all_words(3, 2);
        bool ok = true;
        for (const Permutation& w : Permutation::all(3)) {
            const RingMatrix mw = operator_matrix(
                [&w](const TensorVector& v) { return apply_Tw(w, v); }, words, amb);
            const Permutation winv = w.inverse();
            const RingMatrix mi = operator_matrix(
                [&winv](const TensorVector& v) { return apply_Tw(winv, v); }, words, amb);
            for (std::size_t a = 0; a < mw.size() && ok; ++a)
                for (std::size_t b = 0; b < mw.size() && ok; ++b)
                    if (mw[a][b] != mi[b][a]) ok = false;
            if (!ok) break;
        }
        out.push_back({"adjoint of a word operator is the inverse word, n=3 d=2", ok, ""});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "braid",  "hecke",         "commutant", "qcommute",   "lemma34",    "orthogonality",
        "norms",  "simplicity",    "casimir",   "rotation",   "selfadjoint"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt) {
    const auto capped = [&](int fallback) { return std::min(opt.n.value_or(fallback), 5); };
    const auto capped_d = [&](int fallback) { return std::min(opt.d.value_or(fallback), 5); };
    SuiteResult result;
    result.suite = suite;
    if (suite == "braid") {
        result.checks = suite_braid(capped(4), capped_d(3));
    } else if (suite == "hecke") {
        result.checks = suite_hecke(capped(4), capped_d(3));
    } else if (suite == "commutant") {
        result.checks = suite_commutant(capped(4), capped_d(3));
    } else if (suite == "qcommute") {
        result.checks = suite_qcommute(capped(4));
    } else if (suite == "lemma34") {
        result.checks = suite_lemma34(capped(4));
    } else if (suite == "orthogonality") {
        result.checks = suite_orthogonality(capped(5), opt.q0);
    } else if (suite == "norms") {
        result.checks = suite_norms(capped(5));
    } else if (suite == "simplicity") {
        result.checks = suite_simplicity(capped(5), opt.q0.value_or(Rational(7)));
    } else if (suite == "casimir") {
        result.checks = suite_casimir(capped(4));
    } else if (suite == "rotation") {
        result.checks = suite_rotation(opt.t);
    } else if (suite == "selfadjoint") {
        result.checks = suite_selfadjoint(capped(3), capped_d(3));
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    return result;
}

}  // namespace qhecke
