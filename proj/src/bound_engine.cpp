#include "tfold/bound_engine.hpp"

#include <algorithm>
#include <string>

#include "tfold/errors.hpp"

namespace tfold {

void XiProblem::validate() const {
    if (deg_kc < 0) throw DataError("deg K_C must be non-negative");
    if (!(m0_over_a > Rational(0))) throw DataError("m0/a must be positive");
    if (!(beta > Rational(0))) throw DataError("beta must be positive");
}

namespace {

Rational alpha_of(const XiProblem& p, const Rational& xi, long long m) {
    return (Rational(m - 1) - p.m0_over_a - Rational(1) / p.beta) * xi;
}

}  // namespace

Rational xi_initial(const XiProblem& p) {
    p.validate();
    return Rational(p.deg_kc) / (Rational(1) + p.m0_over_a + Rational(1) / p.beta);
}

std::optional<Rational> xi_step(const XiProblem& p, const Rational& xi, long long m) {
    p.validate();
    if (m < 2) throw DataError("xi_step needs m >= 2");
    if (!(xi > Rational(0))) throw DataError("xi_step needs a positive current bound");
    Rational alpha = alpha_of(p, xi, m);
    if (p.even_curve) {
        if (!(alpha > Rational(0))) return std::nullopt;
        return Rational(Int(p.deg_kc) + 2 * ceil_int(alpha / Rational(2))) / Rational(m);
    }
    if (!(alpha > Rational(1))) return std::nullopt;
    return Rational(Int(p.deg_kc) + ceil_int(alpha)) / Rational(m);
}

Rational optimize_xi(const XiProblem& p, long long m_lo, long long m_hi) {
    p.validate();
    if (m_lo < 2 || m_hi < m_lo) throw DataError("optimize_xi needs 2 <= m_lo <= m_hi");
    Rational best = xi_initial(p);
    if (best.is_zero()) return best;  // deg_kc = 0 admits no improvement steps
    // Candidates after the first sweep all have denominator dividing some
    // m <= m_hi and stay bounded, so strict improvement must stop.
    for (int guard = 0; guard < 1'000'000; ++guard) {
        Rational next = best;
        for (long long m = m_lo; m <= m_hi; ++m)
            if (auto candidate = xi_step(p, best, m); candidate && *candidate > next)
                next = *candidate;
        if (!(next > best)) return best;
        best = next;
    }
    throw DataError("optimize_xi failed to converge");
}

bool birational_alpha_test(const XiProblem& p, const Rational& xi_lower, long long m) {
    p.validate();
    if (m < 2) throw DataError("birational_alpha_test needs m >= 2");
    return alpha_of(p, xi_lower, m) > Rational(2);
}

Rational mu_zero(const Rational& k3, const Rational& l2) {
    if (!(k3 > Rational(0))) throw DataError("mu_zero needs K^3 > 0");
    if (!(l2 > Rational(0))) throw DataError("mu_zero needs L^2 > 0");
    return k3 / (Rational(3) * l2);
}

Rational nu_ratio(const Rational& nu0) {
    if (!(nu0 > Rational(0))) throw DataError("nu_ratio needs nu0 > 0");
    return nu0 / (nu0 + Rational(1));
}

Rational cartier_refine(const Rational& strict_lower, const Int& r) {
    if (r < 1) throw DataError("cartier_refine needs r >= 1");
    return Rational(ceil_strict(strict_lower * Rational(r)), r);
}

Int es_contradiction_numerator(const Rational& k3, const Int& r, const Rational& beta,
                               const Int& curve_deg_min) {
    if (!(k3 > Rational(0))) throw DataError("es scan needs K^3 > 0");
    if (r < 1) throw DataError("es scan needs r >= 1");
    if (!(beta > Rational(0))) throw DataError("es scan needs beta > 0");
    if (curve_deg_min < 1) throw DataError("es scan needs curve degree >= 1");
    // The contradiction requires k/r < beta*d (the left side never reaches
    // beta*d), so no k above beta*d*r can qualify; max with r keeps the scan
    // start honest for tiny beta*d.
    Rational bd = beta * Rational(curve_deg_min);
    Int start = floor_int(bd * Rational(r)) + 1;
    if (start < r) start = r;
    if (start > 10'000'000) throw DataError("es scan range too large: " + start.str());
    for (Int k = start; k > 0; --k) {
        Rational l2{k, r};
        Rational mu = mu_zero(k3, l2);
        if (bd * mu / (mu + Rational(1)) > l2) return k;
    }
    return 0;
}

Int min_degree_given_sections(const Int& h0, const Int& genus_min) {
    if (h0 < 1) throw DataError("section count must be at least 1");
    if (genus_min < 0) throw DataError("genus bound must be non-negative");
    return std::min(Int(2 * (h0 - 1)), Int(h0 + genus_min - 1));
}

void RestrictionBound::validate() const {
    if (!(l2_lower > Rational(0))) throw DataError("L^2 lower bound must be positive");
    if (!(beta_tilde > Rational(0))) throw DataError("beta_tilde must be positive");
    if (distinguish_floor < 1) throw DataError("distinguish floor must be at least 1");
}

Int prop_k1_bound(const RestrictionBound& b) {
    b.validate();
    Int volume_term = floor_sqrt(Rational(8) / b.l2_lower) + 20;
    Int slope_term = ceil_int(Rational(2) / b.beta_tilde) + 19;
    return std::max({volume_term, slope_term, Int(b.distinguish_floor)});
}

Int pencil_restriction_bound(const Int& s_offset, const Rational& xi_min, const Int& threshold) {
    if (s_offset < 0) throw DataError("section offset must be non-negative");
    if (!(xi_min > Rational(0))) throw DataError("xi lower bound must be positive");
    if (threshold < 1) throw DataError("separation threshold must be at least 1");
    Int s_min = ceil_strict(Rational(threshold) / xi_min);  // least s with s * xi > threshold
    if (s_min < 1) s_min = 1;
    return s_offset + s_min;
}

}  // namespace tfold
