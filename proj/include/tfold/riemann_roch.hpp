#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tfold/basket.hpp"

namespace tfold {

// One observed plurigenus value: P_m = value, m >= 2.
struct PlurigenusConstraint {
    long long m = 2;
    Int value;

    friend bool operator==(const PlurigenusConstraint&, const PlurigenusConstraint&) = default;
};

// Numerical data of a minimal projective 3-fold of general type with at worst
// terminal singularities: chi(O_X), the irregularity q, the basket of
// quotient singularities, optionally K^3, observed plurigenera (m >= 2), and
// optionally p_g = P_1.
struct ThreefoldData {
    long long chi = 1;
    long long q = 0;
    Basket basket;
    std::optional<Rational> k3;
    std::vector<PlurigenusConstraint> known_plurigenera;
    std::optional<Int> pg;

    // DataError on: k3 <= 0, q < 0, pg < 0, constraint m < 2 or value < 0,
    // or two constraints at the same m with different values.
    void validate() const;

    friend bool operator==(const ThreefoldData&, const ThreefoldData&) = default;
};

// chi(O_X(mK)) for m >= 1 by singular Riemann-Roch:
//   (1/12) m (m-1) (2m-1) K^3 + (1 - 2m) chi + basket_contribution(m).
// Requires k3 to be present. This direct summation is the defining,
// obviously-correct evaluation; the window kernels below must agree with it.
Rational chi_of_mK(const ThreefoldData& X, long long m);

// P_m = chi(O_X(mK)) for m >= 2 (higher cohomology vanishes on a minimal
// 3-fold of general type). DataError if the value is not a non-negative
// integer — that means the data does not describe such a 3-fold.
Int plurigenus(const ThreefoldData& X, long long m);

// K^3 solved from the lowest-m constraint, then cross-checked against every
// remaining constraint and against an explicit k3 when present. With no
// constraints at all, returns the explicit k3. DataError when nothing
// determines K^3, when the solved value is not positive, or on any mismatch.
Rational solve_k3(const ThreefoldData& X);

// Copy of X with k3 filled in by solve_k3.
ThreefoldData resolve_k3(const ThreefoldData& X);

// (m, P_m) for m = 2..m_max (empty for m_max < 2).
std::vector<std::pair<long long, Int>> plurigenus_table(const ThreefoldData& X, long long m_max);

// Pluricanonical section index: least m >= 2 with P_m >= 2, searched up to
// search_limit inclusive. DataError if no such m exists in range.
long long delta_index(const ThreefoldData& X, long long search_limit = 100);

// P_m for every m in [m_lo, m_hi], m_lo >= 2.
//
// Fast path: all values share the common denominator
// D = lcm(12 * den(K^3), 2 * r_i), and each point's local sum is a prefix
// table over one period plus a whole-period count — O(#points) 64-bit
// operations per m, parallelized over the window with OpenMP. An up-front
// worst-case bound check (exact, arbitrary precision) decides whether 64-bit
// intermediates are safe; if not, the same tables run in arbitrary precision
// serially. Both paths are exact and agree with plurigenus_window_reference.
std::vector<Int> plurigenus_window(const ThreefoldData& X, long long m_lo, long long m_hi);

// Serial reference implementation: per-m direct summation via chi_of_mK.
// Kept for testing and benchmarked against the fast kernel.
std::vector<Int> plurigenus_window_reference(const ThreefoldData& X, long long m_lo,
                                             long long m_hi);

// Certificate that P_m > 0 for EVERY m >= from_m, from a finite scan:
//   - window_positive: P_m > 0 for all m in [from_m, window_hi], and
//   - tail_monotone:   K^3 * window_hi^2 >= 4 * chi.
// The forward difference P_{m+1} - P_m equals (K^3/2) m^2 - 2 chi plus a
// non-negative basket term, so once the scanned window ends at a point where
// the quadratic part dominates, the sequence can never return to zero.
struct PositivityCertificate {
    long long from_m = 0;
    long long window_hi = 0;
    bool window_positive = false;
    bool tail_monotone = false;

    bool holds() const { return window_positive && tail_monotone; }
};
PositivityCertificate certify_positive_from(const ThreefoldData& X, long long from_m,
                                            long long window_hi);

}  // namespace tfold
