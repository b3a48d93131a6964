// Command-line front end: canonical bases as JSON, named verification
// suites, classical idempotent tables, and modular valuation reports.
//
// Exit codes: 0 success, 1 a verification check failed (or an internal
// consistency error surfaced), 2 bad usage or bad argument values.

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhecke/dfreport.hpp"
#include "qhecke/serialize.hpp"
#include "qhecke/tableau.hpp"
#include "qhecke/verify.hpp"

namespace {

qhecke::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return qhecke::Rational(std::stol(text), 1);
        return qhecke::Rational(std::stol(text.substr(0, slash)),
                                std::stol(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            out.push_back(std::stoi(piece));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("cannot parse integer list '" + text + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

int run_basis(int n, int d, const std::string& partition_text, const std::string& q_text) {
    std::vector<int> parts;
    for (int v : parse_int_list(partition_text)) {
        if (v > d)
            throw std::invalid_argument("partition part " + std::to_string(v) +
                                        " exceeds the alphabet size " + std::to_string(d));
        parts.push_back(v);
    }
    if (static_cast<int>(parts.size()) > d)
        throw std::invalid_argument("partition has more rows than the alphabet size");
    while (static_cast<int>(parts.size()) < d) parts.push_back(0);
    const qhecke::Partition p(parts);
    if (p.total() != n)
        throw std::invalid_argument("partition sums to " + std::to_string(p.total()) +
                                    ", expected " + std::to_string(n));

    qhecke::QSpec spec = qhecke::QSpec::symbolic();
    if (q_text == "1") {
        spec = qhecke::QSpec::classical();
    } else if (q_text != "symbolic") {
        const qhecke::Rational q0 = parse_rational(q_text);
        if (q0 == qhecke::Rational(0) || q0 == qhecke::Rational(1) ||
            q0 == qhecke::Rational(-1))
            throw std::invalid_argument(
                "q must avoid 0 and the classical points 1, -1 (use --q 1 for the "
                "classical specialization)");
        spec = qhecke::QSpec::at(q0);
    }
    std::cout << qhecke::basis_json(p, spec) << "\n";
    return 0;
}

int run_verify(const std::string& suite, const qhecke::VerifyOptions& opt) {
    const qhecke::SuiteResult result = qhecke::run_suite(suite, opt);
    std::size_t passed = 0;
    for (const qhecke::CheckResult& check : result.checks) {
        std::cout << (check.passed ? "[pass] " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
        if (check.passed) ++passed;
    }
    std::cout << "suite " << result.suite << ": " << passed << "/" << result.checks.size()
              << " checks passed\n";
    return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact canonical bases, idempotents, and modular reports for the "
                 "two-parameter symmetric group deformation acting on words"};
    app.require_subcommand(1);

    // basis
    auto* basis_cmd = app.add_subcommand("basis", "Print an orthogonal module basis as JSON");
    int basis_n = 0;
    int basis_d = 0;
    std::string basis_partition;
    std::string basis_q = "symbolic";
    basis_cmd->add_option("--n", basis_n, "degree (number of letters per word)")
        ->required()
        ->check(CLI::Range(2, 5));
    basis_cmd->add_option("--d", basis_d, "alphabet size (default: n)")->check(CLI::Range(1, 5));
    basis_cmd->add_option("--partition", basis_partition, "comma-separated shape, e.g. 2,1")
        ->required();
    basis_cmd->add_option("--q", basis_q,
                          "symbolic (default), 1 for the classical limit, or a rational a/b");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    std::optional<int> verify_n;
    std::optional<int> verify_d;
    std::optional<double> verify_t;
    std::string verify_q0;
    verify_cmd->add_option("suite", suite, "one of: " + [] {
                               std::string all;
                               for (const auto& s : qhecke::suite_names())
                                   all += (all.empty() ? "" : ", ") + s;
                               return all;
                           }())
        ->required()
        ->check(CLI::IsMember(qhecke::suite_names()));
    verify_cmd->add_option("--n", verify_n, "cap the degree")->check(CLI::Range(1, 5));
    verify_cmd->add_option("--d", verify_d, "cap the alphabet size")->check(CLI::Range(1, 5));
    verify_cmd->add_option("--t", verify_t, "rotation angle override (|t| <= 0.3)");
    verify_cmd->add_option("--q0", verify_q0, "rational evaluation point override");

    // idempotents
    auto* idem_cmd =
        app.add_subcommand("idempotents", "Print the classical idempotent tables as JSON");
    int idem_n = 0;
    idem_cmd->add_option("--n", idem_n, "degree")->required()->check(CLI::Range(2, 5));

    // df
    auto* df_cmd = app.add_subcommand("df", "Print the modular valuation report as CSV");
    int df_n = 0;
    std::string df_primes;
    df_cmd->add_option("--n", df_n, "degree")->required()->check(CLI::Range(2, 7));
    df_cmd->add_option("--primes", df_primes, "comma-separated primes (default: primes <= n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(basis_cmd)) {
            return run_basis(basis_n, basis_d > 0 ? basis_d : basis_n, basis_partition, basis_q);
        }
        if (app.got_subcommand(verify_cmd)) {
            qhecke::VerifyOptions opt;
            opt.n = verify_n;
            opt.d = verify_d;
            opt.t = verify_t;
            if (!verify_q0.empty()) opt.q0 = parse_rational(verify_q0);
            return run_verify(suite, opt);
        }
        if (app.got_subcommand(idem_cmd)) {
            std::cout << qhecke::idempotents_json(idem_n) << "\n";
            return 0;
        }
        if (app.got_subcommand(df_cmd)) {
            std::vector<long> primes;
            if (!df_primes.empty())
                for (int v : parse_int_list(df_primes)) primes.push_back(v);
            std::cout << qhecke::report_csv(qhecke::df_report(df_n, primes));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
