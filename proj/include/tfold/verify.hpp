#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfold/case_engine.hpp"

namespace tfold {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<CaseReport> case_reports;  // six scenarios, when that stage ran
    std::optional<Int> r3_bound;           // final bound, when derived

    bool all_pass() const;
};

// Replays the complete numeric verification against the given data, which is
// expected to carry the chen-delta18 profile: K^3 reconstruction, Cartier
// index, plurigenus values over [2, 7020] with positivity and shape checks,
// the delta index, the L^2 bounds, all six case scenarios, the aggregated
// level-57 bound, and the surface-invariant exclusion. Every check runs even
// if earlier ones fail; exceptions become failed checks.
VerifyReport run_full_verification(const ThreefoldData& X);

// One "PASS name - detail" / "FAIL name - detail" line per check plus a
// summary line (and the final bound when derived). ANSI color only when
// use_color is set.
std::string format_report(const VerifyReport& report, bool use_color);

}  // namespace tfold
