#ifndef JETBOUNDS_HSERIES_HPP
#define JETBOUNDS_HSERIES_HPP

#include "jetbounds/poly.hpp"
#include "jetbounds/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jetbounds {

/// Truncated power series in the hyperplane class h, with coefficients
/// that are polynomials in the formal degree d. This is the working
/// model of the numerical Chow ring Q[d][h]/(h^{trunc+1}); every
/// operation silently discards h-degrees above the truncation order.
class HSeries {
public:
    explicit HSeries(std::size_t trunc) : trunc_(trunc), coeffs_(trunc + 1) {}

    HSeries(std::size_t trunc, std::vector<Poly> coeffs)
        : trunc_(trunc), coeffs_(std::move(coeffs))
    {
        coeffs_.resize(trunc_ + 1);
    }

    static HSeries one(std::size_t trunc)
    {
        HSeries s(trunc);
        s.coeffs_[0] = Poly(Rational(1));
        return s;
    }

    std::size_t trunc() const { return trunc_; }
    const Poly& coeff(std::size_t j) const { return coeffs_.at(j); }
    void set_coeff(std::size_t j, Poly p) { coeffs_.at(j) = std::move(p); }

    friend bool operator==(const HSeries& a, const HSeries& b) = default;

private:
    std::size_t trunc_;
    std::vector<Poly> coeffs_;
};

/// Exact truncated convolution. Both operands must share a truncation order.
inline HSeries series_mul(const HSeries& a, const HSeries& b)
{
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    HSeries out(a.trunc());
    for (std::size_t j = 0; j <= a.trunc(); ++j) {
        Poly c;
        for (std::size_t i = 0; i <= j; ++i)
            c += a.coeff(i) * b.coeff(j - i);
        out.set_coeff(j, std::move(c));
    }
    return out;
}

inline HSeries series_add(const HSeries& a, const HSeries& b)
{
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("series_add: mismatched truncation orders");
    HSeries out(a.trunc());
    for (std::size_t j = 0; j <= a.trunc(); ++j)
        out.set_coeff(j, a.coeff(j) + b.coeff(j));
    return out;
}

inline HSeries series_scale(const HSeries& a, const Rational& s)
{
    HSeries out(a.trunc());
    for (std::size_t j = 0; j <= a.trunc(); ++j)
        out.set_coeff(j, a.coeff(j) * s);
    return out;
}

/// Binary exponentiation in the truncated ring.
inline HSeries series_pow(const HSeries& a, unsigned e)
{
    HSeries acc = HSeries::one(a.trunc());
    HSeries base = a;
    for (unsigned i = e; i != 0; i >>= 1) {
        if (i & 1)
            acc = series_mul(acc, base);
        if (i > 1)
            base = series_mul(base, base);
    }
    return acc;
}

/// The factor sum_{j=0}^{n} (sign * h / l)^j of the Segre expansion.
/// sign is +1 or -1; l must be a positive integer.
inline HSeries geometric_factor(std::size_t n, long l, int sign = -1)
{
    if (l < 1)
        throw std::invalid_argument("geometric_factor: l must be >= 1");
    const Rational ratio = Rational(sign, l);
    HSeries out(n);
    Rational c = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        out.set_coeff(j, Poly(c));
        c *= ratio;
    }
    return out;
}

/// Degree map of the numerical Chow ring of a degree-d hypersurface:
/// integrates against int_X h^n = d, i.e. returns d times the top
/// h-coefficient.
inline Poly degree_map(const HSeries& s)
{
    return s.coeff(s.trunc()).shifted(1);
}

} // namespace jetbounds

#endif
