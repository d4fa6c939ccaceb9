#include <string>

#include "doctest.h"
#include "tfold/case_engine.hpp"
#include "tfold/errors.hpp"
#include "tfold/fixtures.hpp"
#include "tfold/verify.hpp"

using namespace tfold;

namespace {

// A perfectly valid dataset that satisfies none of the case premises:
// smooth profile with delta = 2.
ThreefoldData off_profile() {
    ThreefoldData X;
    X.chi = 1;
    X.k3 = Rational(14);
    X.pg = Int(0);
    return X;
}

}  // namespace

TEST_CASE("scenario identifiers round-trip through text") {
    for (ScenarioId id : kAllScenarios) CHECK(scenario_id_from_string(to_string(id)) == id);
    CHECK(to_string(ScenarioId::SamePencil) == "SAME_PENCIL");
    CHECK(to_string(ScenarioId::DistinctV4II) == "DISTINCT_V4_II");
    CHECK_THROWS_AS(scenario_id_from_string("NOT_A_CASE"), ParseError);
}

TEST_CASE("scenario definitions carry their constants and claims") {
    Scenario same = scenario_for(ScenarioId::SamePencil);
    CHECK(same.input("deg_kc") == Rational(6));
    CHECK(same.input("xi_floor") == Rational{Int(1), Int(5)});
    CHECK(same.claimed_bound == Int(53));
    CHECK_FALSE(same.assumptions.empty());
    CHECK_THROWS_AS(same.input("no_such_constant"), DataError);

    const Int claims[] = {Int(53), Int(57), Int(57), Int(48), Int(57), Int(57)};
    for (size_t i = 0; i < kAllScenarios.size(); ++i)
        CHECK(scenario_for(kAllScenarios[i]).claimed_bound == claims[i]);
}

TEST_CASE("replaying the six cases reproduces the recorded bounds") {
    ThreefoldData X = chen_delta18();
    const long long bounds[] = {52, 57, 57, 48, 57, 57};
    for (size_t i = 0; i < kAllScenarios.size(); ++i) {
        CAPTURE(to_string(kAllScenarios[i]));
        CaseReport report = run_scenario(scenario_for(kAllScenarios[i]), X);
        CHECK(report.scenario_id == kAllScenarios[i]);
        CHECK(report.derived_bound == bounds[i]);
        CHECK(report.consistent);
        CHECK_NOTHROW(validate_report(report));
        CHECK_FALSE(report.steps.empty());
    }
}

TEST_CASE("case reports print a line-oriented certificate") {
    CaseReport report = run_scenario(scenario_for(ScenarioId::SamePencil), chen_delta18());
    std::string text = report.str();
    CHECK(text.find("SCENARIO SAME_PENCIL\n") == 0);
    CHECK(text.find("ASSUME ") != std::string::npos);
    CHECK(text.find(" | ") != std::string::npos);
    CHECK(text.find("\nBOUND 52\n") != std::string::npos);
    CHECK(text.find("\nCLAIM 53\n") != std::string::npos);
    CHECK(text.find("\nCONSISTENT yes\n") != std::string::npos);
}

TEST_CASE("report validation rejects malformed certificates") {
    CHECK_THROWS_AS(validate_report(CaseReport{}), DataError);  // no steps

    CaseReport report = run_scenario(scenario_for(ScenarioId::SamePencil), chen_delta18());
    CaseReport broken = report;
    broken.steps.back().output = "999";  // final step no longer matches the bound
    CHECK_THROWS_AS(validate_report(broken), DataError);
    broken = report;
    broken.steps.front().anchor.clear();
    CHECK_THROWS_AS(validate_report(broken), DataError);
    broken = report;
    broken.derived_bound = Int(0);
    CHECK_THROWS_AS(validate_report(broken), DataError);
}

TEST_CASE("cases refuse data that violates their premises") {
    ThreefoldData wrong = off_profile();
    for (ScenarioId id : kAllScenarios) {
        CAPTURE(to_string(id));
        CHECK_THROWS_AS(run_scenario(scenario_for(id), wrong), DataError);
    }
    try {
        run_scenario(scenario_for(ScenarioId::SamePencil), wrong);
        FAIL("premise check did not fire");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("scenario premise violated") != std::string::npos);
    }
}

TEST_CASE("the certified L^2 bound and the generic-restriction level") {
    ThreefoldData X = chen_delta18();
    CHECK(lemma_es_bound(X) == Rational{Int(1), Int(195)});
    CHECK(weak_corollary_bound(X) == 59);
}

TEST_CASE("fibre surface invariants are screened numerically") {
    ThreefoldData X = chen_delta18();
    CHECK(surface_invariant_constraint(X, Int(1)));
    CHECK_FALSE(surface_invariant_constraint(X, Int(2)));
    CHECK_THROWS_AS(surface_invariant_constraint(X, Int(0)), DataError);
}

TEST_CASE("the aggregate bound takes the maximum over all six cases") {
    AggregateBound aggregate = theorem_57(chen_delta18());
    CHECK(aggregate.bound == 57);
    REQUIRE(aggregate.reports.size() == 6);
    for (size_t i = 0; i < kAllScenarios.size(); ++i)
        CHECK(aggregate.reports[i].scenario_id == kAllScenarios[i]);

    // The case split only covers section index 18.
    CHECK_THROWS_AS(theorem_57(off_profile()), DataError);
}

TEST_CASE("the global bound combines the case analysis with cited inputs") {
    R3Bound r3 = corollary_r3(chen_delta18());
    CHECK(r3.bound == 57);
    CHECK(r3.delta18_bound == 57);
    CHECK(r3.cited.size() == 2);
}

TEST_CASE("the full verification suite passes on the built-in dataset") {
    VerifyReport report = run_full_verification(chen_delta18());
    CHECK(report.checks.size() == 18);
    CHECK(report.all_pass());
    CHECK(report.case_reports.size() == 6);
    CHECK(report.r3_bound == Int(57));

    std::string plain = format_report(report, false);
    CHECK(plain.find("PASS k3-reconstruction") != std::string::npos);
    CHECK(plain.find("18/18 checks passed") != std::string::npos);
    CHECK(plain.find("RESULT r3 <= 57") != std::string::npos);
    CHECK(plain.find('\x1b') == std::string::npos);
    std::string colored = format_report(report, true);
    CHECK(colored.find("\x1b[32m") != std::string::npos);
}

TEST_CASE("verification reports failures instead of aborting") {
    ThreefoldData wrong = chen_delta18();
    wrong.k3 = Rational{Int(1), Int(1169)};
    wrong.known_plurigenera.clear();  // keep the data self-consistent but off-profile
    VerifyReport report = run_full_verification(wrong);
    CHECK(report.checks.size() == 18);
    CHECK_FALSE(report.all_pass());
    std::string text = format_report(report, false);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("RESULT") == std::string::npos);
}
