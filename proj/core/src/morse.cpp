#include "jetbounds/morse.hpp"

#include "jetbounds/binomial.hpp"

#include <stdexcept>

namespace jetbounds {

JetParams::JetParams(unsigned n_, unsigned k_, Rational eps_)
    : n(n_), k(k_), eps(std::move(eps_))
{
    if (n < 2)
        throw std::invalid_argument("JetParams: n must be >= 2");
    if (k < 1)
        throw std::invalid_argument("JetParams: k must be >= 1");
    if (eps <= 0)
        throw std::invalid_argument("JetParams: eps must be > 0");
}

HSeries segre_series_tk(const JetParams& params)
{
    const unsigned n = params.n;
    HSeries acc = HSeries::one(n);
    for (unsigned l = 1; l <= params.k; ++l) {
        acc = series_mul(acc, series_pow(geometric_factor(n, l, -1), n + 2));
        HSeries twist(n); // 1 + h d / l
        twist.set_coeff(0, Poly(Rational(1)));
        if (n >= 1)
            twist.set_coeff(1, Poly::monomial(Rational(1, l), 1));
        acc = series_mul(acc, twist);
    }
    Integer kf = factorial(params.k);
    Integer kfn = 1;
    for (unsigned i = 0; i < n; ++i)
        kfn *= kf;
    return series_scale(acc, Rational(1, kfn));
}

Poly intersection_a_power(const JetParams& params)
{
    const unsigned n = params.n;
    const unsigned nk = params.big_n();
    const HSeries segre = segre_series_tk(params);
    Poly total;
    Rational two_l = 1;
    for (unsigned l = 0; l <= n; ++l) {
        // int_X s_{n-l}(T_k) h^l = d * (h^{n-l} coefficient of the series)
        total += (two_l * Rational(binomial(nk, l))) * segre.coeff(n - l).shifted(1);
        two_l *= 2;
    }
    return total;
}

Poly intersection_ab(const JetParams& params)
{
    const unsigned n = params.n;
    const unsigned nk = params.big_n();
    const HSeries segre = segre_series_tk(params);
    const Rational factor = Rational(2) + params.eps;
    Poly total;
    Rational two_lm1 = 1;
    for (unsigned l = 1; l <= n; ++l) {
        total += (two_lm1 * factor * Rational(binomial(nk - 1, l - 1)))
                 * segre.coeff(n - l).shifted(1);
        two_lm1 *= 2;
    }
    return total;
}

MorsePolynomial morse_polynomial(const JetParams& params)
{
    const unsigned n = params.n;
    const unsigned nk = params.big_n();
    const CoeffTable table = make_coeff_table(n, params.k);

    // Direct route (Segre series).
    Poly raw = intersection_a_power(params) - Rational(nk) * intersection_ab(params);

    // Closed form: Q_a = (-1)^{n-a} C_a [ B_{n-a}
    //   + sum_{l=1}^{n-a} (2 - (2+eps) l) binom(N_k, l) (-1)^l 2^{l-1} B_{n-a-l} ].
    std::vector<Rational> q(n + 1);
    for (unsigned a = 0; a <= n; ++a) {
        Rational bracket = table.B[n - a];
        Rational two_lm1 = 1;
        for (unsigned l = 1; l <= n - a; ++l) {
            Rational term = (Rational(2) - (Rational(2) + params.eps) * l)
                            * Rational(binomial(nk, l)) * two_lm1 * table.B[n - a - l];
            bracket += (l % 2 == 0) ? term : -term;
            two_lm1 *= 2;
        }
        q[a] = table.C[a] * bracket;
        if ((n - a) % 2 != 0)
            q[a] = -q[a];
    }

    // Cross-check: (k!)^n * raw must equal d * sum_a q[a] d^a.
    Poly closed;
    for (unsigned a = 0; a <= n; ++a)
        closed += Poly::monomial(q[a], a + 1);
    if (Rational(table.kfact_pow_n) * raw != closed)
        throw std::logic_error(
            "morse_polynomial: series route and closed form disagree");

    return MorsePolynomial{params, std::move(raw), std::move(q)};
}

Rational evaluate_p(const MorsePolynomial& mp, const Integer& d)
{
    return mp.raw.eval(Rational(d));
}

} // namespace jetbounds
