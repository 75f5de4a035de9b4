#include "jetbounds/annex.hpp"

#include "jetbounds/binomial.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace jetbounds {

namespace {

/// Visits every l >= 0 with sum a_i l_i = m, in lexicographic order of
/// the leading r-1 coordinates.
template <typename Visitor>
void for_each_lattice_point(const std::vector<long>& a, long m, Visitor&& visit)
{
    const std::size_t r = a.size();
    std::vector<long> l(r, 0);
    auto recurse = [&](auto&& self, std::size_t i, long rest) -> void {
        if (i + 1 == r) {
            if (rest % a[i] == 0) {
                l[i] = rest / a[i];
                visit(static_cast<const std::vector<long>&>(l));
            }
            return;
        }
        for (long v = 0; v * a[i] <= rest; ++v) {
            l[i] = v;
            self(self, i + 1, rest - v * a[i]);
        }
    };
    if (m >= 0)
        recurse(recurse, 0, m);
}

Integer int_pow(long base, unsigned e)
{
    Integer acc = 1;
    for (unsigned i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

} // namespace

WeightSpec::WeightSpec(std::vector<long> weights) : a(std::move(weights))
{
    if (a.empty())
        throw std::invalid_argument("WeightSpec: need at least one weight");
    g = 0;
    l = 1;
    for (long w : a) {
        if (w < 1)
            throw std::invalid_argument("WeightSpec: weights must be >= 1");
        g = std::gcd(g, w);
        l = std::lcm(l, w);
    }
}

WeightSpec WeightedSplitBundle::weight_spec() const
{
    if (degrees.size() != weights.size())
        throw std::invalid_argument("WeightedSplitBundle: degree/weight size mismatch");
    return WeightSpec(weights);
}

Rational lattice_volume_squared(const WeightSpec& w)
{
    Integer sum_sq = 0;
    for (long ai : w.a)
        sum_sq += Integer(ai) * ai;
    return Rational(sum_sq, Integer(w.g) * w.g);
}

Rational simplex_volume_ratio(const WeightSpec& w)
{
    if (w.rank() < 2)
        throw std::invalid_argument("simplex_volume_ratio: requires r >= 2");
    Integer prod = 1;
    for (long ai : w.a)
        prod *= ai;
    return Rational(w.g, factorial(static_cast<unsigned>(w.rank() - 1)) * prod);
}

Rational simplex_monomial_integral(const WeightSpec& w,
                                   const std::vector<unsigned>& p)
{
    if (w.rank() < 2)
        throw std::invalid_argument("simplex_monomial_integral: requires r >= 2");
    if (p.size() != w.rank())
        throw std::invalid_argument("simplex_monomial_integral: exponent count mismatch");
    const unsigned r = static_cast<unsigned>(w.rank());
    unsigned total = 0;
    Integer num = factorial(r - 1);
    Integer scale = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += p[i];
        num *= factorial(p[i]);
        scale *= int_pow(w.a[i], p[i]);
    }
    return Rational(num, factorial(total + r - 1) * scale);
}

Rational beta_integral(unsigned aexp, unsigned bexp)
{
    return Rational(factorial(aexp) * factorial(bexp), factorial(aexp + bexp + 1));
}

Rational lattice_sum_monomial(const WeightSpec& w,
                              const std::vector<unsigned>& p, long m)
{
    if (p.size() != w.rank())
        throw std::invalid_argument("lattice_sum_monomial: exponent count mismatch");
    if (m < 0)
        return 0;
    Integer total = 0;
    for_each_lattice_point(w.a, m, [&](const std::vector<long>& l) {
        Integer term = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            term *= int_pow(l[i], p[i]);
        total += term;
    });
    Integer pfact = 1;
    for (unsigned pi : p)
        pfact *= factorial(pi);
    return Rational(total, pfact);
}

Integer lattice_point_count(const WeightSpec& w, long m)
{
    Integer count = 0;
    for_each_lattice_point(w.a, m, [&](const std::vector<long>&) { ++count; });
    return count;
}

namespace {

ConvergenceReport make_convergence_report(std::vector<RatioSample> samples,
                                          const Rational& tolerance)
{
    ConvergenceReport report{std::move(samples), tolerance, false, false};
    if (report.samples.empty())
        return report;
    report.converged = abs(report.samples.back().ratio - 1) < tolerance;
    report.monotone = true;
    const std::size_t count = report.samples.size();
    const std::size_t first = count >= 3 ? count - 3 : 0;
    for (std::size_t i = first; i + 1 < count; ++i)
        if (abs(report.samples[i + 1].ratio - 1) > abs(report.samples[i].ratio - 1))
            report.monotone = false;
    return report;
}

} // namespace

ConvergenceReport lattice_sum_asymptotic_check(const WeightSpec& w,
                                               const std::vector<unsigned>& p,
                                               const std::vector<long>& m_list,
                                               const Rational& tolerance)
{
    unsigned total_p = 0;
    Integer scale = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total_p += p[i];
        scale *= int_pow(w.a[i], p[i] + 1);
    }
    const unsigned deg = total_p + static_cast<unsigned>(w.rank()) - 1;
    const Rational lead_const = Rational(w.g, scale * factorial(deg));

    std::vector<RatioSample> samples;
    for (long m : m_list) {
        if (m <= 0 || m % w.g != 0)
            throw std::invalid_argument(
                "lattice_sum_asymptotic_check: m must be a positive multiple of gcd(a)");
        const Rational predicted = lead_const * Rational(int_pow(m, deg));
        samples.push_back({m, lattice_sum_monomial(w, p, m) / predicted});
    }
    return make_convergence_report(std::move(samples), tolerance);
}

Integer euler_char_symmetric(const WeightedSplitBundle& b, long m)
{
    const WeightSpec w = b.weight_spec();
    Rational total = 0;
    for_each_lattice_point(w.a, m, [&](const std::vector<long>& l) {
        Integer c = 0;
        for (std::size_t i = 0; i < l.size(); ++i)
            c += Integer(b.degrees[i]) * l[i];
        total += binomial_polynomial(c, b.n);
    });
    if (denominator(total) != 1)
        throw std::logic_error("euler_char_symmetric: non-integer Euler characteristic");
    return numerator(total);
}

WhitneyVerdict whitney_verify(const WeightedSplitBundle& b)
{
    const WeightSpec w = b.weight_spec();
    const unsigned r = static_cast<unsigned>(w.rank());
    const unsigned deg = b.n + r - 1;

    WhitneyVerdict verdict;
    auto& fit = verdict.fit;
    for (unsigned j = 1; j <= deg + 3; ++j) {
        const long m = static_cast<long>(j) * w.l;
        fit.samples.emplace_back(Integer(m), euler_char_symmetric(b, m));
    }

    // Newton interpolation through the first deg+1 samples.
    std::vector<Rational> dd(deg + 1);
    for (unsigned i = 0; i <= deg; ++i)
        dd[i] = Rational(fit.samples[i].second);
    for (unsigned level = 1; level <= deg; ++level)
        for (unsigned i = deg; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1])
                    / Rational(fit.samples[i].first - fit.samples[i - level].first);
    Poly interp;
    Poly basis(Rational(1));
    for (unsigned i = 0; i <= deg; ++i) {
        interp += dd[i] * basis;
        basis = basis * Poly{Rational(-fit.samples[i].first), Rational(1)};
    }
    fit.interpolant = interp;
    fit.leading = interp.coeff(deg);

    // Two held-out residual checks: zero residual certifies that chi is
    // an honest polynomial on multiples of lcm(a).
    for (unsigned j = deg + 1; j <= deg + 2; ++j)
        if (interp.eval(Rational(fit.samples[j].first)) != Rational(fit.samples[j].second))
            throw std::logic_error(
                "whitney_verify: interpolation residual nonzero at held-out sample");

    verdict.lhs = fit.leading * Rational(factorial(deg));

    // Whitney product route: (gcd / prod a_i) [prod_i sum_p (c_i h / a_i)^p]_n.
    std::vector<Rational> series(b.n + 1);
    series[0] = 1;
    for (std::size_t i = 0; i < b.degrees.size(); ++i) {
        const Rational root = Rational(b.degrees[i], b.weights[i]);
        std::vector<Rational> next(b.n + 1);
        Rational rp = 1;
        for (unsigned p = 0; p <= b.n; ++p) {
            for (unsigned q = 0; p + q <= b.n; ++q)
                next[p + q] += rp * series[q];
            rp *= root;
        }
        series = std::move(next);
    }
    Integer prod_a = 1;
    for (long ai : w.a)
        prod_a *= ai;
    verdict.rhs = Rational(w.g, prod_a) * series[b.n];

    verdict.equal = verdict.lhs == verdict.rhs;
    return verdict;
}

ConvergenceReport remark_identity_check(unsigned n, unsigned k,
                                        const std::vector<long>& m_list,
                                        const Rational& tolerance)
{
    if (k < 1)
        throw std::invalid_argument("remark_identity_check: k must be >= 1");

    // Bracket constant, route 1: non-decreasing sequences in {1..k}.
    Rational bracket_multiset = 0;
    auto enumerate = [&](auto&& self, unsigned depth, unsigned start,
                         const Rational& partial) -> void {
        if (depth == n) {
            bracket_multiset += partial;
            return;
        }
        for (unsigned i = start; i <= k; ++i)
            self(self, depth + 1, i, partial / i);
    };
    enumerate(enumerate, 0, 1, Rational(1));

    // Route 2: compositions p_1 + ... + p_k = n of prod i^{-p_i}.
    Rational bracket_composition = 0;
    auto compose = [&](auto&& self, unsigned i, unsigned rest,
                       const Rational& partial) -> void {
        if (i == k) {
            if (rest == 0)
                bracket_composition += partial;
            return;
        }
        Rational factor = 1;
        for (unsigned pi = 0; pi <= rest; ++pi) {
            self(self, i + 1, rest - pi, partial * factor);
            factor /= i + 1;
        }
    };
    compose(compose, 0, n, Rational(1));

    if (bracket_multiset != bracket_composition)
        throw std::logic_error("remark_identity_check: bracket routes disagree");

    std::vector<long> weights(k);
    for (unsigned i = 0; i < k; ++i)
        weights[i] = i + 1;
    const WeightSpec w(weights);
    const unsigned deg = n + k - 1;
    const Rational lead_const =
        bracket_multiset / Rational(factorial(k) * factorial(deg));

    std::vector<RatioSample> samples;
    for (long m : m_list) {
        if (m <= 0)
            throw std::invalid_argument("remark_identity_check: m must be positive");
        Integer total = 0;
        for_each_lattice_point(w.a, m, [&](const std::vector<long>& l) {
            long s = 0;
            for (long li : l)
                s += li;
            total += int_pow(s, n);
        });
        const Rational exact = Rational(total, factorial(n));
        const Rational predicted = lead_const * Rational(int_pow(m, deg));
        samples.push_back({m, exact / predicted});
    }
    return make_convergence_report(std::move(samples), tolerance);
}

} // namespace jetbounds
