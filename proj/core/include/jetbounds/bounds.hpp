#ifndef JETBOUNDS_BOUNDS_HPP
#define JETBOUNDS_BOUNDS_HPP

#include "jetbounds/morse.hpp"
#include "jetbounds/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetbounds {

/// Sign-dropped majorants of the Morse coefficients for k = n:
/// R_a = C_a [ B_{n-a} + sum_{l=1}^{n-a} D_l B_{n-a-l} ] with
/// D_l = (2 + (2+eps) l) binom(N_n, l) 2^{l-1}.
struct MajorantTable {
    JetParams params;
    std::vector<Rational> R; // alpha = 0..n
    std::vector<Rational> D; // D[l] for l = 1..n (D[0] unused, set to 0)
};

/// One named inequality of the bounding-lemma chain.
struct LemmaVerdict {
    std::string name;
    bool holds = false;
    std::string detail; // filled with the violating instance on failure
};

struct BoundsReport {
    JetParams params;
    std::vector<Rational> q;
    MajorantTable r;
    Rational d_eps;
    Rational fujiwara_m;    // D_eps * n^4
    Rational threshold_2m;  // 2 * fujiwara_m
    Integer scan_threshold; // least d0 with P(d) > 0 for all integers d >= d0
    Rational ggl_bound;      // 18((5n+3)/4 + 1) n^4 at eps = 5n+3
    Rational monomial_bound; // 153/4 * n^5
    Rational kobayashi_bound; // 153/4 * (2n-1)^5
    std::vector<LemmaVerdict> verdicts;

    bool all_verdicts() const;
};

/// Requires k = n.
MajorantTable majorants(const JetParams& params);

/// Verifies the seven bounding inequalities exactly. Failures are
/// reported in the verdicts, never thrown. Requires k = n.
std::vector<LemmaVerdict> check_lemma_chain(const JetParams& params);

/// D_eps = max(27/2, 9(1 + eps/4)).
Rational d_epsilon(const Rational& eps);

struct FujiwaraResult {
    bool positive = false;
    /// For t > 2M: the geometric-series lower bound
    /// a_n t^deg (1 - sum_{j>=1} (M/t)^j), itself > 0.
    /// For t <= 2M: the exact value Q(t).
    Rational witness;
    bool via_certificate = false;
};

/// Positivity test for Q(t) = sum a_j t^j under the coefficient
/// hypothesis |a_{deg-j}| <= M^j a_deg (a_deg > 0). The hypothesis is
/// checked; a violation throws std::invalid_argument naming the index.
FujiwaraResult fujiwara_positive(const std::vector<Rational>& coeffs,
                                 const Rational& m, const Rational& t);

/// Least integer d0 such that evaluate_p(d) > 0 for every integer
/// d >= d0. Positivity beyond 2M is guaranteed by the Fujiwara bound;
/// integers 1..ceil(2M) are scanned exactly. Requires k = n.
Integer positivity_threshold(const MorsePolynomial& mp);

struct TheoremBounds {
    Rational ggl;       // 153/4 * n^5
    Rational kobayashi; // 153/4 * (2n-1)^5
};

/// The final degree thresholds. Requires n >= 2; asserts that the
/// monomial bound dominates the eps = 5n+3 Fujiwara bound.
TheoremBounds theorem_bounds(unsigned n);

/// Full audited report for the headline parameters (k = n).
BoundsReport bounds_report(const JetParams& params);

} // namespace jetbounds

#endif
