#include "tfold/verify.hpp"

#include <algorithm>
#include <set>

#include "tfold/errors.hpp"

namespace tfold {

namespace {

// Expected profile of the chen-delta18 dataset. Every number here is pinned
// by an independent derivation (see tests); verification fails loudly on any
// drift in either the data or the engine.
const long long kWindowHi = 7020;
const char* kK3 = "1/1170";
const long long kCartier = 2340;
const long long kDelta = 18;
const long long kSmallPm[] = {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 2, 0,
                              2, 1, 1, 2, 3, 2, 3, 3, 3, 3, 4, 4, 5, 5, 6, 6, 8};  // m = 2..36
// All m in [2, 7020] with P_m < P_{m-1}: five dips while the values are still
// 0/1/2 (the last at 21), then 25, 37, 53, 61, and none after.
const long long kDecreases[] = {9, 13, 17, 19, 21, 25, 37, 53, 61};
const char* kSlope = "56291/14040";
const long long kEsNumerator = 11;
const char* kEsBound = "1/195";
const long long kWeakCorollary = 59;
const long long kScenarioBounds[] = {52, 57, 57, 48, 57, 57};  // kAllScenarios order
const long long kAggregate = 57;
const long long kR3 = 57;

void expect(bool ok, const std::string& msg) {
    if (!ok) throw DataError(msg);
}

template <typename Fn>
void run_check(VerifyReport& report, const std::string& name, Fn&& fn) {
    CheckResult result;
    result.name = name;
    try {
        result.detail = fn();
        result.pass = true;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = e.what();
    }
    report.checks.push_back(std::move(result));
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_full_verification(const ThreefoldData& X) {
    VerifyReport report;

    run_check(report, "k3-reconstruction", [&] {
        Rational k3 = solve_k3(X);
        expect(k3.str() == kK3, "solved K^3 = " + k3.str() + ", expected " + kK3);
        return "K^3 = " + k3.str() + " from the lowest plurigenus constraint";
    });

    run_check(report, "cartier-index", [&] {
        Int r = cartier_index(X.basket);
        expect(r == kCartier, "Cartier index " + r.str() + ", expected " +
                                  std::to_string(kCartier));
        return "lcm of singularity indices = " + r.str();
    });

    run_check(report, "plurigenus-values", [&] {
        auto table = plurigenus_table(X, 60);
        for (long long m = 2; m <= 36; ++m)
            expect(table[size_t(m - 2)].second == kSmallPm[m - 2],
                   "P_" + std::to_string(m) + " = " + table[size_t(m - 2)].second.str() +
                       ", expected " + std::to_string(kSmallPm[m - 2]));
        expect(table[38].second == 9, "P_40 = " + table[38].second.str() + ", expected 9");
        expect(table[55].second == 26, "P_57 = " + table[55].second.str() + ", expected 26");
        expect(table[58].second == 32, "P_60 = " + table[58].second.str() + ", expected 32");
        return std::string("P_2..P_36 plus P_40, P_57, P_60 match the expected profile");
    });

    run_check(report, "plurigenus-window", [&] {
        auto window = plurigenus_window(X, 2, kWindowHi);  // throws unless all values integral >= 0
        expect(window.back() == Int(49269938),
               "P_7020 = " + window.back().str() + ", expected 49269938");
        PositivityCertificate cert = certify_positive_from(X, 20, kWindowHi);
        expect(cert.window_positive, "a plurigenus vanishes in [20, 7020]");
        expect(cert.tail_monotone, "K^3 * 7020^2 < 4 chi: tail not certified");
        return "all of [2, 7020] integral and non-negative; P_m > 0 certified for every m >= 20";
    });

    run_check(report, "delta-index", [&] {
        long long delta = delta_index(X);
        expect(delta == kDelta,
               "delta = " + std::to_string(delta) + ", expected " + std::to_string(kDelta));
        ThreefoldData solved = resolve_k3(X);
        expect(plurigenus(solved, 18) == 2, "P_18 != 2");
        expect(plurigenus(solved, 19) == 0, "P_19 != 0");
        return "delta = 18: first m with two sections, and P_19 drops back to 0";
    });

    run_check(report, "monotonicity-profile", [&] {
        auto window = plurigenus_window(X, 2, kWindowHi);
        std::set<long long> decreases;
        for (size_t i = 1; i < window.size(); ++i)
            if (window[i] < window[i - 1]) decreases.insert(static_cast<long long>(i) + 2);
        std::set<long long> expected(std::begin(kDecreases), std::end(kDecreases));
        std::string got;
        for (long long m : decreases) got += (got.empty() ? "" : ",") + std::to_string(m);
        expect(decreases == expected, "decrease set {" + got + "} does not match the expected 9");
        return "last small-m dip at 21; after that P_m decreases only at 25, 37, 53, 61";
    });

    run_check(report, "periodicity-profile", [&] {
        Rational slope = basket_contribution_slope(X.basket);
        expect(slope.str() == kSlope, "slope = " + slope.str() + ", expected " + kSlope);
        Int r = cartier_index(X.basket);
        long long period = r.convert_to<long long>();
        for (long long m = 1; m <= 40; ++m) {
            Rational diff = basket_contribution(X.basket, m + period) -
                            basket_contribution(X.basket, m);
            expect(diff == Rational(r) * slope,
                   "basket contribution drift off-linear at m = " + std::to_string(m));
        }
        return "basket contribution minus (m-1) * " + slope.str() +
               " is periodic with period " + r.str();
    });

    run_check(report, "es-numerator", [&] {
        ThreefoldData solved = resolve_k3(X);
        Int r = cartier_index(solved.basket);
        Int k = es_contradiction_numerator(*solved.k3, r, Rational(Int(1), Int(24)), 2);
        expect(k == kEsNumerator,
               "scan numerator " + k.str() + ", expected " + std::to_string(kEsNumerator));
        Rational bound = lemma_es_bound(X);
        expect(bound.str() == kEsBound,
               "L^2 bound " + bound.str() + ", expected " + kEsBound);
        return "L^2 > 11/2340 refines to L^2 >= 1/195 by Cartier integrality";
    });

    run_check(report, "weak-corollary", [&] {
        Int bound = weak_corollary_bound(X);
        expect(bound == kWeakCorollary,
               "bound " + bound.str() + ", expected " + std::to_string(kWeakCorollary));
        return "generic restriction alone gives birationality from level " + bound.str();
    });

    for (size_t i = 0; i < kAllScenarios.size(); ++i) {
        ScenarioId id = kAllScenarios[i];
        run_check(report, "scenario-" + std::string(to_string(id)), [&] {
            CaseReport case_report = run_scenario(scenario_for(id), X);
            expect(case_report.derived_bound == kScenarioBounds[i],
                   "derived " + case_report.derived_bound.str() + ", expected " +
                       std::to_string(kScenarioBounds[i]));
            expect(case_report.consistent, "derived bound exceeds the recorded claim");
            std::string detail = "bound " + case_report.derived_bound.str();
            if (case_report.claimed_bound)
                detail += " (claim " + case_report.claimed_bound->str() + ")";
            return detail;
        });
    }

    run_check(report, "theorem-delta18", [&] {
        AggregateBound aggregate = theorem_57(X);
        report.case_reports = aggregate.reports;
        expect(aggregate.bound == kAggregate,
               "aggregate " + aggregate.bound.str() + ", expected " +
                   std::to_string(kAggregate));
        return "max over the six cases = " + aggregate.bound.str();
    });

    run_check(report, "corollary-r3", [&] {
        R3Bound r3 = corollary_r3(X);
        expect(r3.delta18_bound == kAggregate, "delta-18 part " + r3.delta18_bound.str());
        expect(r3.bound == kR3,
               "r3 bound " + r3.bound.str() + ", expected " + std::to_string(kR3));
        expect(r3.cited.size() == 2, "expected exactly two cited inputs");
        report.r3_bound = r3.bound;
        return "r3 <= " + r3.bound.str() + " combining the delta-18 cases with cited inputs";
    });

    run_check(report, "surface-invariant", [&] {
        expect(!surface_invariant_constraint(X, 2),
               "K_F0^2 = 2 should be numerically excluded");
        expect(surface_invariant_constraint(X, 1), "K_F0^2 = 1 should be admissible");
        return "fibre invariants (K^2, p_g) = (2, 2) excluded, (1, 2) admitted";
    });

    return report;
}

std::string format_report(const VerifyReport& report, bool use_color) {
    const char* green = use_color ? "\x1b[32m" : "";
    const char* red = use_color ? "\x1b[31m" : "";
    const char* reset = use_color ? "\x1b[0m" : "";
    std::string out;
    size_t passed = 0;
    for (const auto& check : report.checks) {
        if (check.pass) {
            out += std::string(green) + "PASS" + reset + " " + check.name;
            ++passed;
        } else {
            out += std::string(red) + "FAIL" + reset + " " + check.name;
        }
        if (!check.detail.empty()) out += " - " + check.detail;
        out += "\n";
    }
    out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
           " checks passed\n";
    if (report.all_pass() && report.r3_bound)
        out += "RESULT r3 <= " + report.r3_bound->str() + "\n";
    return out;
}

}  // namespace tfold
