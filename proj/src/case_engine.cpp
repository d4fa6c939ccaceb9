#include "tfold/case_engine.hpp"

#include <algorithm>

#include "tfold/errors.hpp"

namespace tfold {

std::string_view to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::SamePencil: return "SAME_PENCIL";
        case ScenarioId::DistinctV5Case1: return "DISTINCT_V5_CASE1";
        case ScenarioId::DistinctV5Case2: return "DISTINCT_V5_CASE2";
        case ScenarioId::DistinctV4I1: return "DISTINCT_V4_I1";
        case ScenarioId::DistinctV4I2: return "DISTINCT_V4_I2";
        case ScenarioId::DistinctV4II: return "DISTINCT_V4_II";
    }
    throw DataError("unknown scenario id");
}

ScenarioId scenario_id_from_string(std::string_view s) {
    for (ScenarioId id : kAllScenarios)
        if (to_string(id) == s) return id;
    throw ParseError("unknown scenario '" + std::string(s) + "'");
}

const Rational& Scenario::input(std::string_view name) const {
    for (const auto& nv : inputs)
        if (nv.name == name) return nv.value;
    throw DataError("scenario " + std::string(to_string(id)) + " is missing input '" +
                    std::string(name) + "'");
}

namespace {

Rational frac(long long num, long long den) { return Rational(Int(num), Int(den)); }

long long input_ll(const Scenario& s, std::string_view name) {
    const Rational& v = s.input(name);
    if (!v.is_integer())
        throw DataError("scenario input '" + std::string(name) + "' must be an integer");
    return v.num().convert_to<long long>();
}

void require_premise(bool ok, const std::string& what) {
    if (!ok) throw DataError("scenario premise violated: " + what);
}

}  // namespace

Scenario scenario_for(ScenarioId id) {
    Scenario s;
    s.id = id;
    switch (id) {
        case ScenarioId::SamePencil:
            s.assumptions = {
                "the level-18 and level-24 systems induce the same fibration pencil",
                "the generic fibre F0 has canonical invariants (K^2, p_g) = (1, 2)",
                "the generic restricted curve C' is numerically twice sigma*(K_F0) and has "
                "canonical degree 6",
            };
            s.inputs = {
                {"deg_kc", Rational(6)},
                {"curve_class_multiple", Rational(2)},
                {"xi_floor", frac(1, 5)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 53;
            break;
        case ScenarioId::DistinctV5Case1:
            s.assumptions = {
                "the level-18 and level-24 systems induce distinct pencils",
                "the restricted level-36 system on the fibre has dimension at least 5",
                "its restriction to the generic level-24 curve C keeps at least 4 sections, "
                "and C has genus at least 2",
            };
            s.inputs = {
                {"restricted_sections", Rational(4)},
                {"genus_floor", Rational(2)},
                {"beta_tilde", frac(1, 19)},
                {"system_level", Rational(36)},
                {"pencil_level", Rational(24)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 57;
            break;
        case ScenarioId::DistinctV5Case2:
            s.assumptions = {
                "the level-18 and level-24 systems induce distinct pencils",
                "the restricted level-36 system on the fibre has dimension at least 5",
                "its restriction drops to a system cutting two moving curves of sigma-degree "
                "at least 2 each",
            };
            s.inputs = {
                {"curve_count", Rational(2)},
                {"curve_sigma_degree_min", Rational(2)},
                {"beta_tilde", frac(1, 19)},
                {"system_level", Rational(36)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 57;
            break;
        case ScenarioId::DistinctV4I1:
            s.assumptions = {
                "the level-18 and level-24 systems induce distinct pencils",
                "the restricted level-36 system has dimension exactly 4 (type I)",
                "a 4-dimensional sub-system is composed with the pencil, so the remaining "
                "members move through fibres",
            };
            s.inputs = {
                {"sub_system_dim", Rational(4)},
                {"system_level", Rational(36)},
                {"k2_floor", Rational(1)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 48;
            break;
        case ScenarioId::DistinctV4I2:
            s.assumptions = {
                "the level-18 and level-24 systems induce distinct pencils",
                "the restricted level-36 system has dimension exactly 4 (type I)",
                "the restriction stays a genus-2 pencil with xi >= 2 * beta_tilde, "
                "beta_tilde = 1/19",
            };
            s.inputs = {
                {"s_offset", Rational(37)},
                {"xi_min", frac(2, 19)},
                {"threshold", Rational(2)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 57;
            break;
        case ScenarioId::DistinctV4II:
            s.assumptions = {
                "the level-18 and level-24 systems induce distinct pencils",
                "the restricted level-36 system has dimension exactly 4 and is composed "
                "with the same pencil (type II)",
                "the separating tail is again a genus-2 pencil with xi >= 2 * beta_tilde, "
                "beta_tilde = 1/19",
            };
            s.inputs = {
                {"s_offset", Rational(37)},
                {"xi_min", frac(2, 19)},
                {"threshold", Rational(2)},
                {"distinguish_floor", Rational(38)},
            };
            s.claimed_bound = 57;
            break;
    }
    return s;
}

std::string CaseReport::str() const {
    std::string out = "SCENARIO " + std::string(to_string(scenario_id)) + "\n";
    for (const auto& assumption : assumptions) out += "ASSUME " + assumption + "\n";
    for (const auto& step : steps)
        out += step.op + " | " + step.inputs + " | " + step.output + " | " + step.anchor + "\n";
    out += "BOUND " + derived_bound.str() + "\n";
    if (claimed_bound) {
        out += "CLAIM " + claimed_bound->str() + "\n";
        out += std::string("CONSISTENT ") + (consistent ? "yes" : "no") + "\n";
    }
    return out;
}

void validate_report(const CaseReport& report) {
    if (report.steps.empty()) throw DataError("case report has no steps");
    for (const auto& step : report.steps)
        if (step.op.empty() || step.inputs.empty() || step.output.empty() || step.anchor.empty())
            throw DataError("case report step with empty field in scenario " +
                            std::string(to_string(report.scenario_id)));
    if (report.derived_bound < 1) throw DataError("case report bound must be positive");
    if (report.steps.back().output != report.derived_bound.str())
        throw DataError("case report final step does not produce the recorded bound");
}

CaseReport run_scenario(const Scenario& scenario, const ThreefoldData& X) {
    ThreefoldData solved = resolve_k3(X);
    CaseReport report;
    report.scenario_id = scenario.id;
    report.assumptions = scenario.assumptions;
    report.claimed_bound = scenario.claimed_bound;
    auto add = [&report](std::string op, std::string in, std::string out, std::string anchor) {
        report.steps.push_back(
            {std::move(op), std::move(in), std::move(out), std::move(anchor)});
    };

    Int p18 = plurigenus(solved, 18);
    require_premise(p18 == 2, "P_18 = 2 (a canonical pencil at level 18); got " + p18.str());
    add("check_premise", "m=18", p18.str(), "level-18 system is a pencil: exactly two sections");

    Int bound;
    switch (scenario.id) {
        case ScenarioId::SamePencil: {
            Int p24 = plurigenus(solved, 24);
            require_premise(p24 == 3, "P_24 = 3; got " + p24.str());
            add("check_premise", "m=24", p24.str(),
                "level-24 system has exactly three sections");
            Rational nu0 = Rational(p24 - 1) / Rational(24);
            add("nu_zero", "(P_24 - 1) / 24", nu0.str(),
                "at least P_24 - 1 members of the level-24 system move through the pencil");
            Rational beta_tilde = nu_ratio(nu0);
            add("nu_ratio", "nu0=" + nu0.str(), beta_tilde.str(),
                "free-pencil slope: L >= nu0/(nu0+1) * sigma*(K_F0)");
            Rational multiple = scenario.input("curve_class_multiple");
            Rational beta = beta_tilde / multiple;
            add("rescale_to_curve", "beta_tilde=" + beta_tilde.str() + ", C' ~ " +
                multiple.str() + " * sigma*(K_F0)", beta.str(),
                "restriction coefficient against the curve class itself");
            XiProblem prob{input_ll(scenario, "deg_kc"), Rational(24) / Rational(p24 - 1), beta,
                           /*even_curve=*/true};
            Rational xi = optimize_xi(prob);
            add("optimize_xi",
                "deg_kc=" + std::to_string(prob.deg_kc) + ", m0_over_a=" + prob.m0_over_a.str() +
                    ", beta=" + beta.str() + ", even",
                xi.str(), "fixed point of the even rounding improvement over m in [2,200]");
            Rational xi_floor = scenario.input("xi_floor");
            if (xi_floor > xi) xi = xi_floor;
            add("max_with_floor", "engine and classical floor " + xi_floor.str(), xi.str(),
                "the classical degree estimate for the genus-4 curve holds independently");
            Rational l2 = beta * xi;
            add("l2_lower", "beta=" + beta.str() + ", xi=" + xi.str(), l2.str(),
                "L^2 >= beta * (L . C') >= beta * xi");
            RestrictionBound rb{l2, beta_tilde, input_ll(scenario, "distinguish_floor")};
            bound = prop_k1_bound(rb);
            add("prop_k1_bound",
                "l2=" + l2.str() + ", beta_tilde=" + beta_tilde.str() + ", floor=" +
                    std::to_string(rb.distinguish_floor),
                bound.str(), "birationality once the volume and slope terms both separate");
            break;
        }
        case ScenarioId::DistinctV5Case1: {
            Int p24 = plurigenus(solved, 24);
            Int p36 = plurigenus(solved, 36);
            require_premise(p24 >= 2, "P_24 >= 2; got " + p24.str());
            require_premise(p36 >= 5, "P_36 >= 5; got " + p36.str());
            add("check_premise", "m=24, m=36", p24.str() + " and " + p36.str(),
                "the level-24 pencil and a level-36 system of dimension at least 5 exist");
            Int h0{input_ll(scenario, "restricted_sections")};
            Int genus_floor{input_ll(scenario, "genus_floor")};
            Int deg = min_degree_given_sections(h0, genus_floor);
            add("min_degree_given_sections",
                "h0=" + h0.str() + ", genus_min=" + genus_floor.str(), deg.str(),
                "Clifford bound for special divisors, Riemann-Roch for nonspecial ones");
            Rational levels =
                scenario.input("system_level") * scenario.input("pencil_level");
            Rational l2 = Rational(deg) / levels;
            add("l2_lower", "deg=" + deg.str() + " over levels 36 * 24", l2.str(),
                "36L and 24L dominate the two moving systems; their pairing is at least deg");
            RestrictionBound rb{l2, scenario.input("beta_tilde"),
                                input_ll(scenario, "distinguish_floor")};
            bound = prop_k1_bound(rb);
            add("prop_k1_bound",
                "l2=" + l2.str() + ", beta_tilde=" + rb.beta_tilde.str() + ", floor=" +
                    std::to_string(rb.distinguish_floor),
                bound.str(), "birationality once the volume and slope terms both separate");
            break;
        }
        case ScenarioId::DistinctV5Case2: {
            Int p24 = plurigenus(solved, 24);
            Int p36 = plurigenus(solved, 36);
            require_premise(p24 >= 2, "P_24 >= 2; got " + p24.str());
            require_premise(p36 >= 5, "P_36 >= 5; got " + p36.str());
            add("check_premise", "m=24, m=36", p24.str() + " and " + p36.str(),
                "the level-24 pencil and a level-36 system of dimension at least 5 exist");
            Rational pairing = scenario.input("curve_count") *
                               scenario.input("curve_sigma_degree_min") *
                               scenario.input("beta_tilde");
            add("restricted_pairing",
                "2 moving curves, sigma-degree >= 2 each, beta_tilde=" +
                    scenario.input("beta_tilde").str(),
                pairing.str(), "L . C_i >= beta_tilde * sigma-degree(C_i) for each curve");
            Rational l2 = pairing / scenario.input("system_level");
            add("l2_lower", "pairing=" + pairing.str() + " over level 36", l2.str(),
                "36L dominates the restricted system that cuts the two curves");
            RestrictionBound rb{l2, scenario.input("beta_tilde"),
                                input_ll(scenario, "distinguish_floor")};
            bound = prop_k1_bound(rb);
            add("prop_k1_bound",
                "l2=" + l2.str() + ", beta_tilde=" + rb.beta_tilde.str() + ", floor=" +
                    std::to_string(rb.distinguish_floor),
                bound.str(), "birationality once the volume and slope terms both separate");
            break;
        }
        case ScenarioId::DistinctV4I1: {
            Int p36 = plurigenus(solved, 36);
            require_premise(p36 == 8, "P_36 = 8; got " + p36.str());
            add("check_premise", "m=36", p36.str(), "level-36 system has exactly eight sections");
            Int sub_dim{input_ll(scenario, "sub_system_dim")};
            Rational nu0 =
                Rational(p36 - sub_dim) / scenario.input("system_level");
            add("nu_zero", "(P_36 - " + sub_dim.str() + ") / 36", nu0.str(),
                "members outside the 4-dimensional composite part move through the pencil");
            Rational beta_tilde = nu_ratio(nu0);
            add("nu_ratio", "nu0=" + nu0.str(), beta_tilde.str(),
                "free-pencil slope: L >= nu0/(nu0+1) * sigma*(K_F0)");
            Rational l2 =
                beta_tilde * beta_tilde * scenario.input("k2_floor");
            add("l2_lower", "beta_tilde=" + beta_tilde.str() + ", K_F0^2 >= 1", l2.str(),
                "L^2 >= beta_tilde^2 * (sigma*(K_F0))^2 and (sigma*(K_F0))^2 = K_F0^2 >= 1");
            RestrictionBound rb{l2, beta_tilde, input_ll(scenario, "distinguish_floor")};
            bound = prop_k1_bound(rb);
            add("prop_k1_bound",
                "l2=" + l2.str() + ", beta_tilde=" + beta_tilde.str() + ", floor=" +
                    std::to_string(rb.distinguish_floor),
                bound.str(), "birationality once the volume and slope terms both separate");
            break;
        }
        case ScenarioId::DistinctV4I2:
        case ScenarioId::DistinctV4II: {
            Int p36 = plurigenus(solved, 36);
            require_premise(p36 >= 5, "P_36 >= 5; got " + p36.str());
            add("check_premise", "m=36", p36.str(),
                "level-36 system is large enough for the case split to apply");
            Rational xi_min = scenario.input("xi_min");
            add("xi_from_slope", "2 * beta_tilde with beta_tilde=1/19", xi_min.str(),
                "the genus-2 tail pencil restricts L with degree at least 2 * beta_tilde");
            Int s_offset{input_ll(scenario, "s_offset")};
            Int threshold{input_ll(scenario, "threshold")};
            Int level = pencil_restriction_bound(s_offset, xi_min, threshold);
            add("pencil_restriction_bound",
                "offset=" + s_offset.str() + ", xi=" + xi_min.str() + ", threshold=" +
                    threshold.str(),
                level.str(),
                "need s with s * xi > threshold on the tail; offset levels are already spent");
            Int floor_v{input_ll(scenario, "distinguish_floor")};
            bound = level > floor_v ? level : floor_v;
            add("max_with_floor", level.str() + " and " + floor_v.str(), bound.str(),
                "separation level must also clear the distinguishing floor");
            break;
        }
        default:
            throw DataError("unknown scenario id");
    }

    report.derived_bound = bound;
    report.consistent = !report.claimed_bound || report.derived_bound <= *report.claimed_bound;
    validate_report(report);
    return report;
}

Rational lemma_es_bound(const ThreefoldData& X) {
    ThreefoldData solved = resolve_k3(X);
    Int r = cartier_index(solved.basket);
    // The level-24 pencil gives L >= (1/24) S for a moving surface S whose
    // generic curve has sigma-degree at least 2.
    Int k = es_contradiction_numerator(*solved.k3, r, frac(1, 24), 2);
    return cartier_refine(Rational(k, r), r);
}

Int weak_corollary_bound(const ThreefoldData& X) {
    RestrictionBound rb{lemma_es_bound(X), frac(1, 19), 38};
    return prop_k1_bound(rb);
}

bool surface_invariant_constraint(const ThreefoldData& X, const Int& k2_f0) {
    if (k2_f0 < 1) throw DataError("fibre canonical degree K^2 must be at least 1");
    ThreefoldData solved = resolve_k3(X);
    // Same-pencil premises: nu0 = 1/12, beta_tilde = 1/13. The fibre forces
    // K^3 >= nu0 * beta_tilde^2 * K_F0^2; a candidate K_F0^2 violating this
    // is numerically excluded.
    Rational needed = frac(1, 12) * frac(1, 13) * frac(1, 13) * Rational(k2_f0);
    return needed <= *solved.k3;
}

AggregateBound theorem_57(const ThreefoldData& X) {
    long long delta = delta_index(X);
    if (delta != 18)
        throw DataError("case aggregation requires delta = 18 data; got delta = " +
                        std::to_string(delta));
    AggregateBound out;
    out.bound = 0;
    for (ScenarioId id : kAllScenarios) {
        CaseReport report = run_scenario(scenario_for(id), X);
        if (report.derived_bound > out.bound) out.bound = report.derived_bound;
        out.reports.push_back(std::move(report));
    }
    return out;
}

R3Bound corollary_r3(const ThreefoldData& X) {
    AggregateBound aggregate = theorem_57(X);
    R3Bound out;
    out.delta18_bound = aggregate.bound;
    out.bound = std::max(Int(56), aggregate.bound);
    out.cited = {
        "delta <= 15 implies the m-canonical map is birational for every m >= 56 "
        "(cited input, not reproved here)",
        "delta = 16 and delta = 17 cannot occur for these invariants "
        "(cited input, not reproved here)",
    };
    return out;
}

}  // namespace tfold
