#ifndef JETBOUNDS_BINOMIAL_HPP
#define JETBOUNDS_BINOMIAL_HPP

#include "jetbounds/rational.hpp"

#include <vector>

namespace jetbounds {

/// Cache of exact binomial coefficients, filled row by row with the
/// Pascal recurrence. Rows are grown on demand.
class BinomialTable {
public:
    const Integer& operator()(unsigned n, unsigned k)
    {
        static const Integer zero = 0;
        if (k > n)
            return zero;
        while (rows_.size() <= n) {
            const auto m = rows_.size();
            std::vector<Integer> row(m + 1, 1);
            for (std::size_t j = 1; j < m; ++j)
                row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

/// One-off exact binomial coefficient.
inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

/// binom(c + n, n) as a polynomial in c, valid for negative c as well
/// (the Euler-characteristic extension of chi(P^n, O(c))).
inline Rational binomial_polynomial(const Integer& c, unsigned n)
{
    Integer num = 1;
    for (unsigned i = 1; i <= n; ++i)
        num *= c + i;
    return Rational(num, factorial(n));
}

} // namespace jetbounds

#endif
