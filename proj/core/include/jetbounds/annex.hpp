#ifndef JETBOUNDS_ANNEX_HPP
#define JETBOUNDS_ANNEX_HPP

#include "jetbounds/poly.hpp"
#include "jetbounds/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace jetbounds {

/// A weight vector a_1..a_r with its gcd and lcm.
struct WeightSpec {
    std::vector<long> a;
    long g = 1;
    long l = 1;

    explicit WeightSpec(std::vector<long> weights);

    std::size_t rank() const { return a.size(); }
};

/// A direct sum of weighted line bundles on P^n: entry i is O(c_i)
/// carrying weight a_i. Higher-rank weighted summands are represented
/// as several entries sharing a weight.
struct WeightedSplitBundle {
    unsigned n = 0;
    std::vector<long> degrees; // c_i
    std::vector<long> weights; // a_i, all >= 1

    WeightSpec weight_spec() const;
};

/// Exact interpolation of the Euler characteristic on multiples of
/// lcm(a): sample points, the interpolating polynomial in m, and its
/// degree-(n+r-1) leading coefficient.
struct QuasiPolyFit {
    std::vector<std::pair<Integer, Integer>> samples; // (m, chi(m))
    Poly interpolant;                                  // polynomial in m
    Rational leading;                                  // coeff of m^{n+r-1}
};

struct WhitneyVerdict {
    bool equal = false;
    Rational lhs; // asymptotic route: leading coefficient * (n+r-1)!
    Rational rhs; // Whitney product route
    QuasiPolyFit fit;
};

/// Squared volume of a fundamental domain of the lattice
/// {t in Z^r : sum a_i t_i = 0}: (sum a_i^2) / gcd^2. For r = 1 the
/// lattice is trivial and the volume is 1 by convention.
Rational lattice_volume_squared(const WeightSpec& w);

/// vol(Delta_a) / vol(C_H) = gcd / ((r-1)! * prod a_i). Requires r >= 2.
Rational simplex_volume_ratio(const WeightSpec& w);

/// Monomial moment of the uniform probability measure on the simplex
/// {t >= 0 : sum a_i t_i = 1}:
/// (r-1)! prod p_i! / (sum p_i + r - 1)! * prod a_i^{-p_i}. Requires r >= 2.
Rational simplex_monomial_integral(const WeightSpec& w,
                                   const std::vector<unsigned>& p);

/// int_0^1 t^a (1-t)^b dt = a! b! / (a+b+1)!.
Rational beta_integral(unsigned aexp, unsigned bexp);

/// Exact finite sum over the lattice points {l >= 0 : sum a_i l_i = m}
/// of prod l_i^{p_i} / p_i!. Empty sum (gcd does not divide m) = 0.
Rational lattice_sum_monomial(const WeightSpec& w,
                              const std::vector<unsigned>& p, long m);

/// Number of lattice points on {l >= 0 : sum a_i l_i = m}.
Integer lattice_point_count(const WeightSpec& w, long m);

struct RatioSample {
    long m = 0;
    Rational ratio; // exact sum / predicted leading term
};

struct ConvergenceReport {
    std::vector<RatioSample> samples;
    Rational tolerance;
    bool converged = false; // |ratio - 1| < tolerance at the largest m
    bool monotone = false;  // |ratio - 1| non-increasing over the last 3 samples
};

/// Compares the exact lattice sums against the predicted leading term
/// gcd / prod a_i^{p_i + 1} * m^{sum p + r - 1} / (sum p + r - 1)!
/// along an increasing schedule of multiples of gcd(a).
ConvergenceReport lattice_sum_asymptotic_check(const WeightSpec& w,
                                               const std::vector<unsigned>& p,
                                               const std::vector<long>& m_list,
                                               const Rational& tolerance = Rational(1, 20));

/// chi(P^n, S^m E) for the weighted split bundle E: the lattice sum of
/// binom(sum c_i l_i + n, n), with the binomial extended polynomially
/// to negative arguments.
Integer euler_char_symmetric(const WeightedSplitBundle& b, long m);

/// Verifies the numerical Whitney formula for b: the leading term of
/// the Euler-characteristic quasi-polynomial on multiples of lcm(a)
/// against the scaled product of the summands' Segre series. Exact on
/// both sides. Throws std::logic_error if the interpolation fails to
/// reproduce a held-out sample.
WhitneyVerdict whitney_verify(const WeightedSplitBundle& b);

/// The closing identity: sum over l_1 + 2 l_2 + ... + k l_k = m of
/// (l_1 + ... + l_k)^n / n! against its predicted leading term. The
/// bracketed constant is computed both by multiset enumeration and by
/// the composition sum; the two must agree exactly.
ConvergenceReport remark_identity_check(unsigned n, unsigned k,
                                        const std::vector<long>& m_list,
                                        const Rational& tolerance = Rational(1, 20));

} // namespace jetbounds

#endif
