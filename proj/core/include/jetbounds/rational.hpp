#ifndef JETBOUNDS_RATIONAL_HPP
#define JETBOUNDS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace jetbounds {

// All scalar arithmetic in the library is exact. Values are kept in
// canonical form (lowest terms, positive denominator) by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p" when the denominator is 1, "p/q" otherwise. Always exact.
inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in rational literal: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// q^e for a non-negative integer exponent.
inline Rational pow(const Rational& q, unsigned e)
{
    Rational acc = 1;
    Rational base = q;
    for (unsigned i = e; i != 0; i >>= 1) {
        if (i & 1)
            acc *= base;
        if (i > 1)
            base *= base;
    }
    return acc;
}

} // namespace jetbounds

#endif
