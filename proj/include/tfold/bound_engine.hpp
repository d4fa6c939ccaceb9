#pragma once

#include <optional>

#include "tfold/rational.hpp"

namespace tfold {

// Data for the lower-bound iteration on xi = deg(L restricted to the generic
// curve C) in a fibred surface:
//   deg_kc     degree of K_C on the generic curve (2g - 2),
//   m0_over_a  the multiple/section-count ratio m0/a entering the first step,
//   beta       certified coefficient with L >= beta * C numerically,
//   even_curve whether intersection numbers against C are forced even, which
//              enables the stronger rounding branch.
struct XiProblem {
    long long deg_kc = 2;
    Rational m0_over_a;
    Rational beta;
    bool even_curve = false;

    void validate() const;  // DataError on deg_kc < 0, m0_over_a <= 0, beta <= 0
};

// Starting bound: xi >= deg_kc / (1 + m0/a + 1/beta).
Rational xi_initial(const XiProblem& p);

// One improvement step at level m. With alpha = (m - 1 - m0/a - 1/beta) * xi:
//   even branch  (even_curve, alpha > 0): (deg_kc + 2*ceil(alpha/2)) / m
//   general branch          (alpha > 1):  (deg_kc + ceil(alpha)) / m
// Returns the candidate when the branch applies (it may equal xi), nullopt
// when no branch applies. Requires m >= 2.
std::optional<Rational> xi_step(const XiProblem& p, const Rational& xi, long long m);

// Best bound reachable from xi_initial by repeatedly sweeping m over
// [m_lo, m_hi] and taking the largest candidate, until a full sweep brings no
// strict improvement. Terminates: candidates live on denominators dividing
// some m in range and are bounded above.
Rational optimize_xi(const XiProblem& p, long long m_lo = 2, long long m_hi = 200);

// alpha-criterion for birationality at level m with the certified bound
// xi_lower: (m - 1 - m0/a - 1/beta) * xi_lower > 2, strictly.
bool birational_alpha_test(const XiProblem& p, const Rational& xi_lower, long long m);

// mu0 = k3 / (3 * l2): the multiple bound entering the slope estimates.
// DataError unless k3 > 0 and l2 > 0.
Rational mu_zero(const Rational& k3, const Rational& l2);

// nu0 / (nu0 + 1). DataError unless nu0 > 0.
Rational nu_ratio(const Rational& nu0);

// Least multiple of 1/r strictly above x: ceil_strict(x * r) / r. This is
// how "L^2 > x" upgrades to "L^2 >= refined" when r * L^2 is a positive
// integer (r a Cartier multiple). DataError unless r >= 1.
Rational cartier_refine(const Rational& strict_lower, const Int& r);

// Largest numerator k >= 0 such that assuming r * L^2 = k still contradicts
// the restriction chain: beta * d * mu0/(mu0 + 1) > k / r with
// mu0 = k3 / (3 * (k/r)). The predicate is anti-monotone in k, so a
// descending scan from just above beta * d * r finds the answer; k = 0 means
// no contradiction is available. Conclusion downstream: L^2 > k / r.
Int es_contradiction_numerator(const Rational& k3, const Int& r, const Rational& beta,
                               const Int& curve_deg_min);

// Least degree of a divisor with h0 independent sections on some smooth curve
// of genus >= genus_min: min over the special chain (Clifford, d >= 2(h0-1))
// and the nonspecial chain (Riemann-Roch, d >= h0 + genus_min - 1).
// DataError unless h0 >= 1 and genus_min >= 0.
Int min_degree_given_sections(const Int& h0, const Int& genus_min);

// Inputs for the separation-level bound on a fibred 3-fold.
struct RestrictionBound {
    Rational l2_lower;             // certified L^2 >= l2_lower on the fibre
    Rational beta_tilde;           // certified L >= beta_tilde * sigma*(K_F0)
    long long distinguish_floor = 38;  // level that already separates distinct fibres

    void validate() const;  // DataError on l2 <= 0, beta_tilde <= 0, floor < 1
};

// Birationality level:
//   max( floor_sqrt(8 / l2_lower) + 20, ceil(2 / beta_tilde) + 19, distinguish_floor ).
Int prop_k1_bound(const RestrictionBound& b);

// Pencil separation level: the least s >= 1 with s * xi_min > threshold,
// shifted by s_offset. DataError unless xi_min > 0, threshold >= 1,
// s_offset >= 0.
Int pencil_restriction_bound(const Int& s_offset, const Rational& xi_min, const Int& threshold);

}  // namespace tfold
