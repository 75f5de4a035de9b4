#include "jetbounds/jet_coefficients.hpp"

#include "jetbounds/hseries.hpp"

#include <stdexcept>

namespace jetbounds {

namespace {

// Scalar truncated series (degrees 0..n) as a plain coefficient vector.
std::vector<Rational> scalar_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, unsigned n)
{
    std::vector<Rational> out(n + 1);
    for (unsigned i = 0; i <= n && i < a.size(); ++i)
        for (unsigned j = 0; i + j <= n && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Rational> scalar_pow(std::vector<Rational> base, unsigned e, unsigned n)
{
    std::vector<Rational> acc(n + 1);
    acc[0] = 1;
    for (unsigned i = e; i != 0; i >>= 1) {
        if (i & 1)
            acc = scalar_mul(acc, base, n);
        if (i > 1)
            base = scalar_mul(base, base, n);
    }
    return acc;
}

} // namespace

std::vector<Rational> compute_B(unsigned n, unsigned k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("compute_B: need n >= 1 and k >= 1");
    std::vector<Rational> acc(n + 1);
    acc[0] = 1;
    for (unsigned l = 1; l <= k; ++l) {
        std::vector<Rational> factor(n + 1);
        Rational c = 1;
        for (unsigned j = 0; j <= n; ++j) {
            factor[j] = c;
            c /= l;
        }
        acc = scalar_mul(acc, scalar_pow(std::move(factor), n + 2, n), n);
    }
    return acc;
}

Rational compute_B_bruteforce(unsigned n, unsigned k, unsigned gamma)
{
    if (gamma > n)
        throw std::invalid_argument(
            "compute_B_bruteforce: gamma > n is outside the validated range");
    if (gamma == 0)
        return 1;

    // The ordered set has k(n+2) elements; the element at position i
    // carries the value i/(n+2) + 1. Non-decreasing sequences in the
    // ordered set = multisets of positions.
    const unsigned size = k * (n + 2);
    Rational total = 0;
    auto recurse = [&](auto&& self, unsigned depth, unsigned start,
                       const Rational& partial) -> void {
        if (depth == gamma) {
            total += partial;
            return;
        }
        for (unsigned i = start; i < size; ++i) {
            const unsigned value = i / (n + 2) + 1;
            self(self, depth + 1, i, partial / value);
        }
    };
    recurse(recurse, 0, 0, Rational(1));
    return total;
}

std::vector<Rational> compute_C(unsigned k)
{
    if (k < 1)
        throw std::invalid_argument("compute_C: need k >= 1");
    std::vector<Rational> c(k + 1);
    c[0] = 1;
    for (unsigned l = 1; l <= k; ++l)
        for (unsigned a = l; a >= 1; --a)
            c[a] += c[a - 1] / l;
    return c;
}

Rational compute_C_bruteforce(unsigned k, unsigned alpha)
{
    if (alpha > k)
        return 0;
    if (alpha == 0)
        return 1;
    Rational total = 0;
    std::vector<unsigned> sel(alpha);
    for (unsigned i = 0; i < alpha; ++i)
        sel[i] = i + 1;
    while (true) {
        Rational prod = 1;
        for (unsigned v : sel)
            prod /= v;
        total += prod;
        // next strictly increasing tuple in {1..k}
        int i = static_cast<int>(alpha) - 1;
        while (i >= 0 && sel[i] == k - (alpha - 1 - i))
            --i;
        if (i < 0)
            break;
        ++sel[i];
        for (unsigned j = i + 1; j < alpha; ++j)
            sel[j] = sel[j - 1] + 1;
    }
    return total;
}

CoeffTable make_coeff_table(unsigned n, unsigned k)
{
    CoeffTable t;
    t.n = n;
    t.k = k;
    t.B = compute_B(n, k);
    t.C = compute_C(k);
    t.C.resize(n + 1); // C_alpha = 0 for alpha > k
    Integer kf = factorial(k);
    t.kfact_pow_n = 1;
    for (unsigned i = 0; i < n; ++i)
        t.kfact_pow_n *= kf;
    return t;
}

Rational lambda(const CoeffTable& table, unsigned alpha, unsigned beta)
{
    if (beta < alpha || beta > table.n)
        return 0;
    const unsigned gamma = beta - alpha;
    Rational v = table.B[gamma] * table.C[alpha] / Rational(table.kfact_pow_n);
    return (gamma % 2 == 0) ? v : Rational(-v);
}

} // namespace jetbounds
