#include "qhecke/dfreport.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qhecke/hecke.hpp"
#include "qhecke/linalg.hpp"
#include "qhecke/operators.hpp"
#include "qhecke/qarith.hpp"

namespace qhecke {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

}  // namespace

std::pair<int, long> valuation_row(int i, long prime) {
    if (i < 2) throw std::invalid_argument("valuation_row: index starts at 2");
    if (!is_prime(prime)) throw std::invalid_argument("valuation_row: modulus must be prime");
    const LaurentPoly poly = qnum(i, true);
    const std::size_t cap = static_cast<std::size_t>(2L * i * prime);
    std::size_t precision = static_cast<std::size_t>(4 * i);
    for (;;) {
        const FpSeries s = substitute_series(poly, prime, precision);
        if (!s.is_zero()) return {static_cast<int>(s.valuation()), s.leading_coeff()};
        if (precision >= cap)
            throw std::logic_error("valuation_row: no nonzero term within the finiteness cap");
        precision = std::min(precision * 2, cap);
    }
}

ValuationReport df_report(int n, const std::vector<long>& primes) {
    if (n < 2) throw std::invalid_argument("df_report: need n >= 2");
    std::vector<long> ps = primes;
    if (ps.empty())
        for (long p = 2; p <= n; ++p)
            if (is_prime(p)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    for (long p : ps)
        if (!is_prime(p)) throw std::invalid_argument("df_report: listed modulus is not prime");

    ValuationReport report;
    report.n = n;
    for (long p : ps)
        for (int i = 2; i <= n; ++i) {
            const auto [v, lead] = valuation_row(i, p);
            report.rows.push_back(ValuationRow{p, i, v, lead});
        }
    report.no_rational_prime = true;  // every row terminated with a finite valuation
    return report;
}

std::string report_csv(const ValuationReport& report) {
    std::ostringstream os;
    os << "prime,i,valuation,leading_coeff\n";
    for (const ValuationRow& row : report.rows)
        os << row.prime << ',' << row.i << ',' << row.valuation << ',' << row.leading_coeff
           << '\n';
    os << "no_rational_prime_in_S: " << (report.no_rational_prime ? "true" : "false") << '\n';
    return os.str();
}

bool deformation_fiber_check(int n) {
    const std::vector<Permutation> perms = Permutation::all(n);
    for (const Permutation& u : perms)
        for (const Permutation& v : perms) {
            const HeckeElement product =
                hecke_multiply(HeckeElement::basis(u), HeckeElement::basis(v));
            if (specialize_q1(product) != GroupAlgebraElement::basis(u * v)) return false;
        }
    return true;
}

namespace {

// apply_Tw on a fixed monomial, memoized across pairs.
const TensorVector& word_action(const Permutation& w, const Word& word, const Ambient& amb,
                                std::map<std::pair<Permutation, Word>, TensorVector>& memo) {
    const auto key = std::make_pair(w, word);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(key, apply_Tw(w, TensorVector::monomial(amb, word))).first->second;
}

}  // namespace

bool faithfulness_check(int n, const Rational& q0) {
    const Ambient amb{n, n};
    const std::vector<Word> words = all_words(n, n);
    const std::vector<Permutation> perms = Permutation::all(n);
    std::map<std::pair<Permutation, Word>, TensorVector> memo;

    // generator pairs first, then a fixed sample of random pairs
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            pairs.emplace_back(Permutation::adjacent(n, i), Permutation::adjacent(n, j));
    std::mt19937 rng(20240911);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 20; ++trial)
        pairs.emplace_back(perms[pick(rng)], perms[pick(rng)]);

    for (const auto& [u, v] : pairs) {
        const HeckeElement product =
            hecke_multiply(HeckeElement::basis(u), HeckeElement::basis(v));
        for (const Word& word : words) {
            TensorVector lhs(amb);
            for (const auto& [w, c] : product.terms())
                lhs += word_action(w, word, amb, memo).scaled(c);
            if (lhs != apply_Tw(u, word_action(v, word, amb, memo))) return false;
        }
    }

    // linear independence of the word operators on the all-distinct block
    const std::vector<Word> block = words_of_multidegree(std::vector<int>(amb.d, 1));
    std::map<Word, std::size_t> index;
    for (std::size_t k = 0; k < block.size(); ++k) index[block[k]] = k;
    QMatrix flat;
    for (const Permutation& w : perms) {
        std::vector<Rational> row(block.size() * block.size(), Rational(0));
        for (std::size_t col = 0; col < block.size(); ++col) {
            const TensorVector image =
                apply_Tw(w, TensorVector::monomial(amb, block[col])).evaluate(q0);
            for (const auto& [word, c] : image.entries())
                row[index.at(word) * block.size() + col] = c.as_rational();
        }
        flat.push_back(std::move(row));
    }
    return rank(flat) == perms.size();
}

}  // namespace qhecke
