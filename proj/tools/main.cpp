// jetbounds: exact intersection-theoretic degree bounds for hypersurface
// hyperbolicity via holomorphic Morse inequalities on jet spaces.
//
// Subcommands: bound, morse, coeffs, verify, annex (plus the aliases
// verify-lemmas and verify-whitney). All machine output is exact:
// rationals are serialized as "p/q" strings, never as floats.

#include "jetbounds/annex.hpp"
#include "jetbounds/bounds.hpp"
#include "jetbounds/jet_coefficients.hpp"
#include "jetbounds/json_io.hpp"
#include "jetbounds/morse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace jetbounds;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

Rational resolve_eps(const std::string& eps_str, unsigned n)
{
    if (eps_str.empty())
        return Rational(5 * n + 3);
    return parse_rational(eps_str);
}

std::pair<unsigned, unsigned> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const unsigned v = static_cast<unsigned>(std::stoul(s));
        return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))),
            static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
}

int cmd_bound(unsigned n, const std::string& eps_str, long d_opt,
              const std::string& format, const Output& out)
{
    const JetParams params(n, n, resolve_eps(eps_str, n));
    const BoundsReport report = bounds_report(params);
    const MorsePolynomial mp = morse_polynomial(params);

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j = to_json(report);
        if (d_opt > 0) {
            j["d"] = d_opt;
            j["p_at_d"] = to_string(evaluate_p(mp, Integer(d_opt)));
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,alpha,q,r\n";
        for (unsigned a = 0; a <= n; ++a)
            os << n << "," << a << "," << to_string(report.q[a]) << ","
               << to_string(report.r.R[a]) << "\n";
    } else {
        os << "n = " << n << ", k = " << n << ", eps = " << to_string(params.eps)
           << "\n";
        os << "D_eps            = " << to_string(report.d_eps) << "\n";
        os << "fujiwara M       = " << to_string(report.fujiwara_m) << "\n";
        os << "threshold 2M     = " << to_string(report.threshold_2m) << "\n";
        os << "scan threshold   = " << report.scan_threshold.str() << "\n";
        os << "ggl_bound        = " << to_string(report.ggl_bound) << "\n";
        os << "monomial_bound   = " << to_string(report.monomial_bound)
           << " (~" << approx(report.monomial_bound) << ")\n";
        os << "kobayashi_bound  = " << to_string(report.kobayashi_bound)
           << " (~" << approx(report.kobayashi_bound) << ")\n";
        for (const auto& v : report.verdicts)
            os << (v.holds ? "PASS " : "FAIL ") << v.name
               << (v.detail.empty() ? "" : "  [" + v.detail + "]") << "\n";
        if (d_opt > 0) {
            const Rational p = evaluate_p(mp, Integer(d_opt));
            os << "P(" << n << ", " << d_opt << ", " << to_string(params.eps)
               << ") = " << to_string(p) << " ("
               << (p > 0 ? "positive" : "not positive") << ")\n";
        }
    }
    out.write(os.str());
    return report.all_verdicts() ? kExitOk : kExitVerificationFailure;
}

int cmd_morse(unsigned n, unsigned k, const std::string& eps_str, long d_opt,
              const std::string& format, const Output& out)
{
    const JetParams params(n, k, resolve_eps(eps_str, n));
    const MorsePolynomial mp = morse_polynomial(params);

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j = to_json(mp);
        if (d_opt > 0) {
            j["d"] = d_opt;
            j["p_at_d"] = to_string(evaluate_p(mp, Integer(d_opt)));
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,alpha,q\n";
        for (unsigned a = 0; a <= n; ++a)
            os << n << "," << a << "," << to_string(mp.q[a]) << "\n";
    } else {
        os << "P(n, d, eps) for n = " << n << ", k = " << k
           << ", eps = " << to_string(params.eps) << "\n";
        for (unsigned a = 0; a <= n; ++a)
            os << "Q_" << a << " = " << to_string(mp.q[a]) << "\n";
        os << "raw coefficients (powers of d):";
        for (const auto& c : mp.raw.coeffs())
            os << " " << to_string(c);
        os << "\n";
        if (d_opt > 0)
            os << "P(" << d_opt << ") = "
               << to_string(evaluate_p(mp, Integer(d_opt))) << "\n";
    }
    out.write(os.str());
    return kExitOk;
}

int cmd_coeffs(unsigned n, unsigned k, const std::string& format, const Output& out)
{
    const CoeffTable table = make_coeff_table(n, k);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["B"] = rational_list_json(table.B);
        j["C"] = rational_list_json(table.C);
        j["kfact_pow_n"] = table.kfact_pow_n.str();
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,k,type,index,value\n";
        for (unsigned g = 0; g <= n; ++g)
            os << n << "," << k << ",B," << g << "," << to_string(table.B[g]) << "\n";
        for (unsigned a = 0; a <= n; ++a)
            os << n << "," << k << ",C," << a << "," << to_string(table.C[a]) << "\n";
    } else {
        os << "n = " << n << ", k = " << k << ", (k!)^n = "
           << table.kfact_pow_n.str() << "\n";
        for (unsigned g = 0; g <= n; ++g)
            os << "B_" << g << " = " << to_string(table.B[g]) << "\n";
        for (unsigned a = 0; a <= n; ++a)
            os << "C_" << a << " = " << to_string(table.C[a]) << "\n";
    }
    out.write(os.str());
    return kExitOk;
}

struct WhitneyCase {
    WeightedSplitBundle bundle;
};

std::vector<WhitneyCase> whitney_grid(unsigned max_n, unsigned max_r,
                                      long weight_max, long deg_min, long deg_max)
{
    std::vector<WhitneyCase> cases;
    for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned r = 1; r <= max_r; ++r) {
            std::vector<long> weights(r, 1), degrees(r, deg_min);
            auto advance = [](std::vector<long>& v, long lo, long hi) {
                for (auto& x : v) {
                    if (x < hi) {
                        ++x;
                        return true;
                    }
                    x = lo;
                }
                return false;
            };
            do {
                std::fill(degrees.begin(), degrees.end(), deg_min);
                do {
                    cases.push_back({WeightedSplitBundle{n, degrees, weights}});
                } while (advance(degrees, deg_min, deg_max));
            } while (advance(weights, 1, weight_max));
        }
    }
    return cases;
}

int run_whitney_suite(unsigned max_n, unsigned max_r, long weight_max,
                      long deg_min, long deg_max, unsigned jobs, const Output& out)
{
    const auto cases = whitney_grid(max_n, max_r, weight_max, deg_min, deg_max);
    std::vector<WhitneyVerdict> verdicts(cases.size());

    jobs = std::max(1u, jobs);
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < cases.size(); i = next++)
                verdicts[i] = whitney_verify(cases[i].bundle);
        });
    for (auto& w : workers)
        w.join();

    std::ostringstream os;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!verdicts[i].equal) {
            ++failures;
            const auto& b = cases[i].bundle;
            os << "FAIL whitney n=" << b.n << " degrees=(";
            for (std::size_t j = 0; j < b.degrees.size(); ++j)
                os << (j ? "," : "") << b.degrees[j];
            os << ") weights=(";
            for (std::size_t j = 0; j < b.weights.size(); ++j)
                os << (j ? "," : "") << b.weights[j];
            os << ") lhs=" << to_string(verdicts[i].lhs)
               << " rhs=" << to_string(verdicts[i].rhs) << "\n";
        }
    }
    os << (failures == 0 ? "PASS" : "FAIL") << " whitney suite: "
       << (cases.size() - failures) << "/" << cases.size() << " exact-equal\n";
    out.write(os.str());
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_lemmas_suite(unsigned n_lo, unsigned n_hi, const std::string& eps_str,
                     const Output& out)
{
    std::ostringstream os;
    bool all = true;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const JetParams params(n, n, resolve_eps(eps_str, n));
        for (const auto& v : check_lemma_chain(params)) {
            if (!v.holds)
                all = false;
            os << (v.holds ? "PASS " : "FAIL ") << "n=" << n << " " << v.name
               << (v.detail.empty() ? "" : "  [" + v.detail + "]") << "\n";
        }
    }
    out.write(os.str());
    return all ? kExitOk : kExitVerificationFailure;
}

int run_coeffs_suite(unsigned n, unsigned k, const Output& out)
{
    std::ostringstream os;
    bool all = true;
    const auto b = compute_B(n, k);
    for (unsigned g = 0; g <= n; ++g) {
        const Rational brute = compute_B_bruteforce(n, k, g);
        const bool ok = brute == b[g];
        if (!ok)
            all = false;
        os << (ok ? "PASS " : "FAIL ") << "B_" << g << " generating-function "
           << to_string(b[g]) << " vs enumeration " << to_string(brute) << "\n";
    }
    const auto c = compute_C(k);
    for (unsigned a = 0; a <= k; ++a) {
        const Rational brute = compute_C_bruteforce(k, a);
        const bool ok = brute == c[a];
        if (!ok)
            all = false;
        os << (ok ? "PASS " : "FAIL ") << "C_" << a << " recursion "
           << to_string(c[a]) << " vs enumeration " << to_string(brute) << "\n";
    }
    out.write(os.str());
    return all ? kExitOk : kExitVerificationFailure;
}

int cmd_annex(unsigned doublings, const std::string& tol_str, const Output& out)
{
    const Rational tol = tol_str.empty() ? Rational(1, 20) : parse_rational(tol_str);
    std::ostringstream os;
    bool all = true;

    auto render = [&](const char* name, const ConvergenceReport& report) {
        const bool ok = report.converged && report.monotone;
        if (!ok)
            all = false;
        os << (ok ? "PASS " : "FAIL ") << name << ": largest-m ratio "
           << to_string(report.samples.back().ratio) << " (~"
           << approx(report.samples.back().ratio) << ")"
           << (report.monotone ? "" : ", non-monotone") << "\n";
    };

    {
        const WeightSpec w({1, 2, 3});
        std::vector<long> schedule;
        for (unsigned j = 0; j <= doublings; ++j)
            schedule.push_back(6L << j);
        render("lattice sum a=(1,2,3) p=(1,0,0)",
               lattice_sum_asymptotic_check(w, {1, 0, 0}, schedule, tol));
    }
    {
        std::vector<long> schedule;
        for (unsigned j = 4; j <= 14; ++j)
            schedule.push_back(1L << j);
        render("remark identity k=2 n=2", remark_identity_check(2, 2, schedule, tol));
        render("remark identity k=3 n=2", remark_identity_check(3, 2, schedule, tol));
    }

    out.write(os.str());
    return all ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Morse-inequality intersection bounds on jet spaces"};
    app.require_subcommand(1);

    std::string eps_str, format = "text", output_path, suite = "lemmas";
    std::string n_range = "2..6", tol_str;
    unsigned n = 2, k = 0, max_n = 3, max_r = 3, jobs = 1, doublings = 10;
    long d_opt = 0, weight_max = 3, deg_min = -1, deg_max = 2;

    auto add_common = [&](CLI::App* cmd, bool with_k) {
        cmd->add_option("--n", n, "dimension of the hypersurface (>= 2)")->required();
        if (with_k)
            cmd->add_option("--k", k, "jet order (default: n)");
        cmd->add_option("--eps", eps_str, "twist, exact rational \"p/q\" (default 5n+3)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", output_path, "output file (default stdout)");
    };

    auto* bound = app.add_subcommand("bound", "degree bounds and audited report (k = n)");
    add_common(bound, false);
    bound->add_option("--d", d_opt, "also evaluate P at this degree");

    auto* morse = app.add_subcommand("morse", "Morse intersection polynomial P(n,d,eps)");
    add_common(morse, true);
    morse->add_option("--d", d_opt, "also evaluate P at this degree");

    auto* coeffs = app.add_subcommand("coeffs", "combinatorial coefficient tables B, C");
    add_common(coeffs, true);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "whitney | lemmas | coeffs")
        ->check(CLI::IsMember({"whitney", "lemmas", "coeffs"}));
    verify->add_option("--n-range", n_range, "n range for the lemmas suite, e.g. 2..6");
    verify->add_option("--n", n, "dimension for the coeffs suite");
    verify->add_option("--k", k, "jet order for the coeffs suite");
    verify->add_option("--eps", eps_str, "twist for the lemmas suite (default 5n+3)");
    verify->add_option("--max-n", max_n, "whitney grid: largest ambient dimension");
    verify->add_option("--max-r", max_r, "whitney grid: largest summand count");
    verify->add_option("--weight-max", weight_max, "whitney grid: largest weight");
    verify->add_option("--deg-min", deg_min, "whitney grid: smallest degree");
    verify->add_option("--deg-max", deg_max, "whitney grid: largest degree");
    verify->add_option("--jobs", jobs, "parallel workers for the whitney grid");
    verify->add_option("--output", output_path, "output file (default stdout)");

    auto* verify_lemmas = app.add_subcommand("verify-lemmas", "alias: verify --suite lemmas");
    verify_lemmas->add_option("--n-range", n_range, "n range, e.g. 2..6");
    verify_lemmas->add_option("--eps", eps_str, "twist (default 5n+3)");
    verify_lemmas->add_option("--output", output_path, "output file");

    auto* verify_whitney = app.add_subcommand("verify-whitney", "alias: verify --suite whitney");
    verify_whitney->add_option("--max-n", max_n, "largest ambient dimension");
    verify_whitney->add_option("--max-r", max_r, "largest summand count");
    verify_whitney->add_option("--weight-max", weight_max, "largest weight");
    verify_whitney->add_option("--deg-min", deg_min, "smallest degree");
    verify_whitney->add_option("--deg-max", deg_max, "largest degree");
    verify_whitney->add_option("--jobs", jobs, "parallel workers");
    verify_whitney->add_option("--output", output_path, "output file");

    auto* annex = app.add_subcommand("annex", "annex convergence checks");
    annex->add_option("--doublings", doublings, "length of the doubling m-schedule");
    annex->add_option("--tolerance", tol_str, "|ratio - 1| tolerance, rational (default 1/20)");
    annex->add_option("--output", output_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Output out{output_path};
        if (bound->parsed())
            return cmd_bound(n, eps_str, d_opt, format, out);
        if (morse->parsed())
            return cmd_morse(n, k ? k : n, eps_str, d_opt, format, out);
        if (coeffs->parsed())
            return cmd_coeffs(n, k ? k : n, format, out);
        if (verify->parsed()) {
            if (suite == "whitney")
                return run_whitney_suite(max_n, max_r, weight_max, deg_min, deg_max,
                                         jobs, out);
            if (suite == "coeffs")
                return run_coeffs_suite(n, k ? k : n, out);
            const auto [lo, hi] = parse_range(n_range);
            return run_lemmas_suite(lo, hi, eps_str, out);
        }
        if (verify_lemmas->parsed()) {
            const auto [lo, hi] = parse_range(n_range);
            return run_lemmas_suite(lo, hi, eps_str, out);
        }
        if (verify_whitney->parsed())
            return run_whitney_suite(max_n, max_r, weight_max, deg_min, deg_max,
                                     jobs, out);
        if (annex->parsed())
            return cmd_annex(doublings, tol_str, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
