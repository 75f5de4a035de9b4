#ifndef JETBOUNDS_POLY_HPP
#define JETBOUNDS_POLY_HPP

#include "jetbounds/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace jetbounds {

/// Dense univariate polynomial over Rational, used throughout for
/// polynomials in the formal hypersurface degree d. Canonical form:
/// no trailing zero coefficient, the zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }
    explicit Poly(const Rational& c) { if (c != 0) coeffs_ = {c}; }

    static Poly monomial(const Rational& c, std::size_t power)
    {
        if (c == 0)
            return {};
        std::vector<Rational> cs(power + 1);
        cs[power] = c;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Poly& operator+=(const Poly& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Rational& s)
    {
        if (s == 0)
            return {};
        std::vector<Rational> out(a.coeffs_);
        for (auto& c : out)
            c *= s;
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    /// Multiplication by the monomial d^k.
    Poly shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<Rational> out(coeffs_.size() + k);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i + k] = coeffs_[i];
        return Poly(std::move(out));
    }

    /// Horner evaluation at an exact rational point.
    Rational eval(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace jetbounds

#endif
