// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "jetbounds/annex.hpp"
#include "jetbounds/bounds.hpp"
#include "jetbounds/jet_coefficients.hpp"
#include "jetbounds/morse.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace jetbounds;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<bool(std::ostream&)>& body)
{
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= budget_seconds) {
        ok = false;
        detail << " [over time budget of " << budget_seconds << " s]";
    }
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title
              << " (" << elapsed << " s)"
              << (detail.str().empty() ? "" : "  -- " + detail.str()) << "\n";
}

bool criterion_threshold(std::ostream& out)
{
    const JetParams params(2, 2, Rational(13));
    const BoundsReport report = bounds_report(params);
    if (report.threshold_2m != Rational(1224)) {
        out << "2M = " << to_string(report.threshold_2m);
        return false;
    }
    if (report.threshold_2m != 2 * d_epsilon(params.eps) * 16) {
        out << "2M != 2 D_eps n^4";
        return false;
    }
    const Rational p = evaluate_p(morse_polynomial(params), 1225);
    if (!(p > 0)) {
        out << "P(2,1225,13) = " << to_string(p);
        return false;
    }
    return true;
}

bool criterion_theorem_table(std::ostream& out)
{
    for (unsigned n = 2; n <= 6; ++n) {
        const TheoremBounds b = theorem_bounds(n);
        const Rational monomial = Rational(153, 4) * pow(Rational(n), 5);
        const Rational kobayashi = Rational(153, 4) * pow(Rational(2 * n - 1), 5);
        const Rational ggl = 18 * (Rational(5 * n + 3, 4) + 1) * pow(Rational(n), 4);
        if (b.ggl != monomial || b.kobayashi != kobayashi || !(monomial >= ggl)) {
            out << "mismatch at n = " << n;
            return false;
        }
    }
    return true;
}

bool criterion_dual_route(std::ostream& out)
{
    for (unsigned n = 2; n <= 5; ++n)
        for (const Rational& eps :
             {Rational(1), Rational(5 * n + 3), Rational(40)}) {
            // morse_polynomial hard-errors on route disagreement; also
            // re-check the identity from the public pieces
            const MorsePolynomial mp = morse_polynomial(JetParams(n, n, eps));
            const CoeffTable table = make_coeff_table(n, n);
            Poly closed;
            for (unsigned a = 0; a <= n; ++a)
                closed += Poly::monomial(mp.q[a], a + 1);
            if (Rational(table.kfact_pow_n) * mp.raw != closed) {
                out << "identity fails at n = " << n << ", eps = " << to_string(eps);
                return false;
            }
        }
    return true;
}

bool criterion_lemma_chain(std::ostream& out)
{
    for (unsigned n = 2; n <= 8; ++n)
        for (const auto& v : check_lemma_chain(JetParams::headline(n)))
            if (!v.holds) {
                out << "n = " << n << ": " << v.name << " " << v.detail;
                return false;
            }
    return true;
}

bool criterion_coefficient_oracles(std::ostream& out)
{
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            const auto b = compute_B(n, k);
            for (unsigned g = 0; g <= n; ++g)
                if (b[g] != compute_B_bruteforce(n, k, g)) {
                    out << "B mismatch at n=" << n << " k=" << k << " gamma=" << g;
                    return false;
                }
            const auto c = compute_C(k);
            for (unsigned a = 0; a <= k; ++a)
                if (c[a] != compute_C_bruteforce(k, a)) {
                    out << "C mismatch at k=" << k << " alpha=" << a;
                    return false;
                }
        }
    return true;
}

bool criterion_whitney(std::ostream& out)
{
    std::size_t cases = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned r = 1; r <= 3; ++r) {
            std::vector<long> weights(r, 1), degrees(r, -1);
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
                std::fill(degrees.begin(), degrees.end(), -1L);
                do {
                    ++cases;
                    const WhitneyVerdict v =
                        whitney_verify(WeightedSplitBundle{n, degrees, weights});
                    if (!v.equal) {
                        out << "n=" << n << " lhs=" << to_string(v.lhs)
                            << " rhs=" << to_string(v.rhs);
                        return false;
                    }
                } while (advance(degrees, -1, 2));
            } while (advance(weights, 1, 3));
        }
    out << cases << " bundles exact-equal";
    return true;
}

bool criterion_annex_identities(std::ostream& out)
{
    // simplex integral vs the independent iterated-Beta recursion
    const std::vector<std::vector<long>> weight_grid = {
        {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}, {1, 2, 3}, {1, 1, 2, 3}, {2, 3, 4, 5}};
    for (const auto& a : weight_grid) {
        const WeightSpec w(a);
        std::vector<unsigned> p(a.size(), 0);
        bool ok = true;
        auto recurse = [&](auto&& self, std::size_t i, unsigned budget) -> void {
            if (!ok)
                return;
            if (i == a.size()) {
                if (simplex_monomial_integral(w, p)
                    != oracles::simplex_integral_recursive(a, p))
                    ok = false;
                return;
            }
            for (unsigned v = 0; v <= budget; ++v) {
                p[i] = v;
                self(self, i + 1, budget - v);
            }
        };
        recurse(recurse, 0, 5);
        if (!ok) {
            out << "simplex integral mismatch for a of rank " << a.size();
            return false;
        }
    }

    // documented m-schedules for the asymptotic checks
    std::vector<long> schedule;
    for (unsigned j = 0; j <= 10; ++j)
        schedule.push_back(6L << j);
    const auto lattice =
        lattice_sum_asymptotic_check(WeightSpec({1, 2, 3}), {1, 0, 0}, schedule);
    if (!lattice.converged || !lattice.monotone) {
        out << "lattice sum ratio "
            << to_string(lattice.samples.back().ratio);
        return false;
    }

    std::vector<long> remark_schedule;
    for (unsigned j = 4; j <= 14; ++j)
        remark_schedule.push_back(1L << j);
    const auto remark = remark_identity_check(2, 2, remark_schedule);
    if (!remark.converged || !remark.monotone) {
        out << "remark identity ratio "
            << to_string(remark.samples.back().ratio);
        return false;
    }
    return true;
}

bool criterion_fujiwara_suite(std::ostream& out)
{
    oracles::Rng rng(424242);
    std::uniform_int_distribution<int> deg_dist(1, 6);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> pos(1, 99);
    for (int trial = 0; trial < 500; ++trial) {
        const int deg = deg_dist(rng.gen);
        const Rational m(pos(rng.gen), pos(rng.gen));
        const Rational lead(pos(rng.gen), pos(rng.gen));
        std::vector<Rational> coeffs(deg + 1);
        coeffs[deg] = lead;
        Rational m_pow = 1;
        for (int j = 1; j <= deg; ++j) {
            m_pow *= m;
            coeffs[deg - j] = Rational(num(rng.gen), 100) * m_pow * lead;
        }
        const Rational t = 2 * m + Rational(pos(rng.gen), pos(rng.gen));
        if (!fujiwara_positive(coeffs, m, t).positive) {
            out << "trial " << trial << " not positive";
            return false;
        }
        Rational value = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            value = value * t + *it;
        if (!(value > 0)) {
            out << "trial " << trial << " exact sign check failed";
            return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    run_criterion(1, "Fujiwara threshold 1224 and P(2,1225,13) > 0", 1.0,
                  criterion_threshold);
    run_criterion(2, "theorem-bound table for n = 2..6", 1.0,
                  criterion_theorem_table);
    run_criterion(3, "dual-route Morse identity, n in {2..5}, k = n", 30.0,
                  criterion_dual_route);
    run_criterion(4, "lemma chain for n = 2..8, eps = 5n+3", 60.0,
                  criterion_lemma_chain);
    run_criterion(5, "coefficient oracles, exhaustive n,k <= 3", 10.0,
                  criterion_coefficient_oracles);
    run_criterion(6, "Whitney verification over the full grid", 120.0,
                  criterion_whitney);
    run_criterion(7, "annex identities and asymptotic convergence", 120.0,
                  criterion_annex_identities);
    run_criterion(8, "Fujiwara property suite, 500 randomized polynomials", 10.0,
                  criterion_fujiwara_suite);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
