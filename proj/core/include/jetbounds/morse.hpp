#ifndef JETBOUNDS_MORSE_HPP
#define JETBOUNDS_MORSE_HPP

#include "jetbounds/hseries.hpp"
#include "jetbounds/jet_coefficients.hpp"
#include "jetbounds/poly.hpp"
#include "jetbounds/rational.hpp"

#include <vector>

namespace jetbounds {

/// Parameters of the jet-space intersection computation on a degree-d
/// hypersurface X in P^{n+1}: dimension n >= 2, jet order k >= 1
/// (the degree bounds need k = n), and the exact rational twist eps > 0.
struct JetParams {
    unsigned n;
    unsigned k;
    Rational eps;

    JetParams(unsigned n_, unsigned k_, Rational eps_);

    /// dim of the projectivized jet bundle: n + n*k - 1.
    unsigned big_n() const { return n + n * k - 1; }

    /// The headline choice k = n, eps = 5n + 3.
    static JetParams headline(unsigned n_) { return {n_, n_, Rational(5 * n_ + 3)}; }
};

/// The Morse intersection polynomial P(n,d,eps) = A^{N_k} - N_k A^{N_k-1} B
/// as a polynomial in d, together with the closed-form coefficients Q_alpha.
/// raw is un-normalized; construction asserts (k!)^n * raw = d * sum Q_a d^a.
struct MorsePolynomial {
    JetParams params;
    Poly raw;
    std::vector<Rational> q; // Q_alpha, alpha = 0..n
};

/// Total Segre series of the weighted jet bundle T_k of X:
/// (1/(k!)^n) prod_{l=1..k} [sum_{j<=n} (-h/l)^j]^{n+2} [1 + h d / l].
HSeries segre_series_tk(const JetParams& params);

/// A^{N_k} = sum_{l=0}^{n} 2^l binom(N_k, l) int_X s_{n-l}(T_k) h^l,
/// computed from the Segre series (the direct route).
Poly intersection_a_power(const JetParams& params);

/// A^{N_k - 1} . B = sum_{l=1}^{n} 2^{l-1} (2+eps) binom(N_k-1, l-1)
/// int_X s_{n-l}(T_k) h^l, from the Segre series.
Poly intersection_ab(const JetParams& params);

/// Builds P(n,d,eps) by the direct series route and the Q_alpha closed
/// form, and cross-checks the two. Throws std::logic_error if the two
/// routes disagree.
MorsePolynomial morse_polynomial(const JetParams& params);

/// Exact Horner evaluation of raw at an integer degree d >= 1
/// (d = 0 is allowed and yields 0).
Rational evaluate_p(const MorsePolynomial& mp, const Integer& d);

} // namespace jetbounds

#endif
