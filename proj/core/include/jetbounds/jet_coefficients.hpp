#ifndef JETBOUNDS_JET_COEFFICIENTS_HPP
#define JETBOUNDS_JET_COEFFICIENTS_HPP

#include "jetbounds/rational.hpp"

#include <cstddef>
#include <vector>

namespace jetbounds {

/// Combinatorial coefficients entering the Segre expansion of the
/// weighted jet bundle: B[gamma] is the h^gamma coefficient of
/// prod_{l=1..k} (sum_{j=0}^{n} (h/l)^j)^{n+2}, C[alpha] the h^alpha
/// coefficient of prod_{l=1..k} (1 + h/l). Both lists run 0..n, with
/// C[alpha] = 0 for alpha > k. kfact_pow_n = (k!)^n is kept separate
/// from B and C.
struct CoeffTable {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<Rational> B;
    std::vector<Rational> C;
    Integer kfact_pow_n;
};

/// B_gamma for gamma = 0..n, via the truncated generating function.
std::vector<Rational> compute_B(unsigned n, unsigned k);

/// Independent oracle for a single B_gamma: direct enumeration of the
/// non-decreasing length-gamma sequences in the ordered k(n+2)-element
/// multiset {1,...,1, 2,...,2, ..., k,...,k}, summing 1/(u_1...u_gamma).
/// Only valid for gamma <= n, where the per-factor truncation of the
/// generating function cannot bind; larger gamma is refused.
Rational compute_B_bruteforce(unsigned n, unsigned k, unsigned gamma);

/// C_alpha for alpha = 0..k, coefficients of prod_{l=1..k} (1 + h/l).
std::vector<Rational> compute_C(unsigned k);

/// Independent oracle for C_alpha: enumeration of the size-alpha
/// subsets of {1,...,k}.
Rational compute_C_bruteforce(unsigned k, unsigned alpha);

CoeffTable make_coeff_table(unsigned n, unsigned k);

/// Lambda_{alpha,beta}: the coefficient of d^alpha h^beta in the Segre
/// series of the jet bundle. Zero unless beta >= alpha, otherwise
/// (-1)^{beta-alpha} B_{beta-alpha} C_alpha / (k!)^n.
Rational lambda(const CoeffTable& table, unsigned alpha, unsigned beta);

} // namespace jetbounds

#endif
