#include "jetbounds/bounds.hpp"

#include "jetbounds/binomial.hpp"

#include <stdexcept>

namespace jetbounds {

namespace {

void require_k_equals_n(const JetParams& params, const char* where)
{
    if (params.k != params.n)
        throw std::invalid_argument(std::string(where) + ": requires k = n");
}

Rational n_pow4(unsigned n)
{
    const Rational nn = Rational(n) * n;
    return nn * nn;
}

} // namespace

bool BoundsReport::all_verdicts() const
{
    for (const auto& v : verdicts)
        if (!v.holds)
            return false;
    return true;
}

MajorantTable majorants(const JetParams& params)
{
    require_k_equals_n(params, "majorants");
    const unsigned n = params.n;
    const unsigned nn = params.big_n();
    const CoeffTable table = make_coeff_table(n, n);

    std::vector<Rational> d(n + 1);
    Rational two_lm1 = 1;
    for (unsigned l = 1; l <= n; ++l) {
        d[l] = (Rational(2) + (Rational(2) + params.eps) * l)
               * Rational(binomial(nn, l)) * two_lm1;
        two_lm1 *= 2;
    }

    std::vector<Rational> r(n + 1);
    for (unsigned a = 0; a <= n; ++a) {
        Rational bracket = table.B[n - a];
        for (unsigned l = 1; l <= n - a; ++l)
            bracket += d[l] * table.B[n - a - l];
        r[a] = table.C[a] * bracket;
    }
    return MajorantTable{params, std::move(r), std::move(d)};
}

std::vector<LemmaVerdict> check_lemma_chain(const JetParams& params)
{
    require_k_equals_n(params, "check_lemma_chain");
    const unsigned n = params.n;
    const CoeffTable table = make_coeff_table(n, n);
    const MajorantTable maj = majorants(params);
    const MorsePolynomial mp = morse_polynomial(params);
    const Rational n2 = Rational(n) * n;
    const Rational n4 = n2 * n2;
    const Rational deps = d_epsilon(params.eps);

    std::vector<LemmaVerdict> out;
    auto check = [&out](std::string name, bool ok, std::string detail = {}) {
        out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
    };

    bool ok = true;
    std::string bad;
    for (unsigned g = 0; g + 1 <= n && ok; ++g)
        if (!(table.B[g + 1] <= 2 * n2 * table.B[g])) {
            ok = false;
            bad = "gamma = " + std::to_string(g);
        }
    check("B_{g+1} <= 2 n^2 B_g", ok, bad);

    ok = true;
    for (unsigned a = 0; a + 1 <= n && ok; ++a)
        if (!(table.C[a] <= Rational(3, 2) * n2 * table.C[a + 1])) {
            ok = false;
            bad = "alpha = " + std::to_string(a);
        }
    check("C_a <= 3/2 n^2 C_{a+1}", ok, bad);

    ok = true;
    for (unsigned l = 1; l + 1 <= n && ok; ++l)
        if (!(maj.D[l + 1] <= 9 * n2 * maj.D[l])) {
            ok = false;
            bad = "l = " + std::to_string(l);
        }
    check("D_{l+1} <= 9 n^2 D_l", ok, bad);

    check("R_{n-1} <= 9 n^4 (1 + eps/4) R_n",
          maj.R[n - 1] <= 9 * n4 * (1 + params.eps / 4) * maj.R[n]);

    ok = true;
    for (unsigned a = 1; a + 1 <= n && ok; ++a)
        if (!(maj.R[a - 1] <= Rational(27, 2) * n4 * maj.R[a])) {
            ok = false;
            bad = "alpha = " + std::to_string(a);
        }
    check("R_{a-1} <= 27/2 n^4 R_a", ok, bad);

    ok = true;
    for (unsigned a = 0; a <= n && ok; ++a)
        if (!(abs(mp.q[a]) <= maj.R[a])) {
            ok = false;
            bad = "alpha = " + std::to_string(a);
        }
    check("|Q_a| <= R_a", ok, bad);

    ok = true;
    for (unsigned a = 0; a <= n && ok; ++a)
        if (!(maj.R[a] <= pow(deps, n - a) * pow(n4, n - a) * maj.R[n])) {
            ok = false;
            bad = "alpha = " + std::to_string(a);
        }
    check("R_a <= D_eps^{n-a} n^{4(n-a)} R_n", ok, bad);

    return out;
}

Rational d_epsilon(const Rational& eps)
{
    if (eps <= 0)
        throw std::invalid_argument("d_epsilon: eps must be > 0");
    const Rational candidate = 9 * (1 + eps / 4);
    return candidate > Rational(27, 2) ? candidate : Rational(27, 2);
}

FujiwaraResult fujiwara_positive(const std::vector<Rational>& coeffs,
                                 const Rational& m, const Rational& t)
{
    if (coeffs.empty() || coeffs.back() <= 0)
        throw std::invalid_argument("fujiwara_positive: leading coefficient must be > 0");
    const std::size_t deg = coeffs.size() - 1;

    Rational m_pow = 1;
    for (std::size_t j = 1; j <= deg; ++j) {
        m_pow *= m;
        if (!(abs(coeffs[deg - j]) <= m_pow * coeffs.back()))
            throw std::invalid_argument(
                "fujiwara_positive: hypothesis |a_{n-j}| <= M^j a_n violated at j = "
                + std::to_string(j));
    }

    FujiwaraResult res;
    if (t > 2 * m) {
        // Q(t) >= a_n t^deg (1 - sum_{j=1}^{deg} (M/t)^j), and the sum is
        // < 1 since M/t < 1/2.
        const Rational ratio = m / t;
        Rational geo = 0;
        Rational rp = 1;
        for (std::size_t j = 1; j <= deg; ++j) {
            rp *= ratio;
            geo += rp;
        }
        res.witness = coeffs.back() * pow(t, static_cast<unsigned>(deg)) * (1 - geo);
        res.positive = true;
        res.via_certificate = true;
        return res;
    }

    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * t + *it;
    res.witness = value;
    res.positive = value > 0;
    return res;
}

Integer positivity_threshold(const MorsePolynomial& mp)
{
    require_k_equals_n(mp.params, "positivity_threshold");
    const unsigned n = mp.params.n;
    const Rational m = d_epsilon(mp.params.eps) * n_pow4(n);

    // Validate the Fujiwara hypothesis on the Q_alpha (throws otherwise);
    // positivity is then guaranteed for all d > 2M.
    (void)fujiwara_positive(mp.q, m, 2 * m + 1);

    const Rational two_m = 2 * m;
    const Integer limit =
        (numerator(two_m) + denominator(two_m) - 1) / denominator(two_m);

    // sign(P(d)) = sign(sum_a Q_a d^a) for d > 0.
    Integer last_nonpositive = 0;
    for (Integer d = 1; d <= limit; ++d) {
        Rational value = 0;
        const Rational dr(d);
        for (auto it = mp.q.rbegin(); it != mp.q.rend(); ++it)
            value = value * dr + *it;
        if (value <= 0)
            last_nonpositive = d;
    }
    return last_nonpositive + 1;
}

TheoremBounds theorem_bounds(unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("theorem_bounds: n must be >= 2");
    const Rational nr(n);
    TheoremBounds b;
    b.ggl = Rational(153, 4) * pow(nr, 5);
    b.kobayashi = Rational(153, 4) * pow(2 * nr - 1, 5);
    const Rational fujiwara = 18 * (Rational(5 * n + 3, 4) + 1) * n_pow4(n);
    if (!(fujiwara <= b.ggl))
        throw std::logic_error(
            "theorem_bounds: monomial bound fails to dominate the Fujiwara bound");
    return b;
}

BoundsReport bounds_report(const JetParams& params)
{
    require_k_equals_n(params, "bounds_report");
    const unsigned n = params.n;
    const MorsePolynomial mp = morse_polynomial(params);
    const TheoremBounds tb = theorem_bounds(n);

    BoundsReport report{params,
                        mp.q,
                        majorants(params),
                        d_epsilon(params.eps),
                        {},
                        {},
                        {},
                        18 * (Rational(5 * n + 3, 4) + 1) * n_pow4(n),
                        tb.ggl,
                        tb.kobayashi,
                        check_lemma_chain(params)};
    report.fujiwara_m = report.d_eps * n_pow4(n);
    report.threshold_2m = 2 * report.fujiwara_m;
    report.scan_threshold = positivity_threshold(mp);
    return report;
}

} // namespace jetbounds
