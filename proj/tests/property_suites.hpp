#pragma once

// Property checks shared by the unit tests and the acceptance gate. Each
// suite verifies a library contract against an independent oracle written
// here (brute-force sums, first-match enumeration, or randomized instances
// with fixed seeds), throws std::runtime_error on the first violation, and
// returns the number of cases it checked.

namespace tfold::props {

// floor_sqrt contract n >= 0, n^2 <= p/q < (n+1)^2: exhaustive over all
// p, q <= max_pq plus 2000 random large values.
long long check_floor_sqrt(long long max_pq = 400);

// local_contribution against the defining modular sum, the b <-> r-b
// symmetry, and the one-period increment (r^2 - 1) / 12, for every coprime
// pair with r <= r_max and every m <= m_max.
long long check_local_contribution(long long r_max = 12, long long m_max = 30);

// optimize_xi on randomized problems: never below xi_initial, positive, a
// fixed point of xi_step over the sweep range, and monotone in the curve
// degree.
long long check_optimize_xi(int cases = 200);

// cartier_refine on randomized inputs: strictly above the input, minimal
// among multiples of 1/r, and r times the result integral.
long long check_cartier_refine(int cases = 500);

// min_degree_given_sections against first-match enumeration over d.
long long check_min_degree();

}  // namespace tfold::props
