#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfold/bound_engine.hpp"
#include "tfold/riemann_roch.hpp"

namespace tfold {

// The six cases of the birationality analysis for delta = 18 data. The split
// is by how the level-18, level-24 and level-36 systems interact: whether the
// induced pencils coincide, and the dimension/type of the level-36 system.
enum class ScenarioId {
    SamePencil,       // level-18 and level-24 systems give the same pencil
    DistinctV5Case1,  // distinct pencils, dim >= 5, curve keeps 4 sections
    DistinctV5Case2,  // distinct pencils, dim >= 5, restriction drops to two moving curves
    DistinctV4I1,     // distinct pencils, dim = 4, type I, composite sub-pencil
    DistinctV4I2,     // distinct pencils, dim = 4, type I, genus-2 pencil tail
    DistinctV4II,     // distinct pencils, dim = 4, type II (composed with the pencil)
};

inline constexpr std::array<ScenarioId, 6> kAllScenarios = {
    ScenarioId::SamePencil,      ScenarioId::DistinctV5Case1, ScenarioId::DistinctV5Case2,
    ScenarioId::DistinctV4I1,    ScenarioId::DistinctV4I2,    ScenarioId::DistinctV4II,
};

std::string_view to_string(ScenarioId id);            // "SAME_PENCIL", ...
ScenarioId scenario_id_from_string(std::string_view s);  // ParseError on unknown

struct NamedValue {
    std::string name;
    Rational value;
};

// One case: its identifier, the geometric side conditions it assumes, the
// exact rational constants the case supplies (facts of the geometric
// situation, not derivable from the numerical data), and the bound claimed by
// the source analysis for cross-checking.
struct Scenario {
    ScenarioId id;
    std::vector<std::string> assumptions;
    std::vector<NamedValue> inputs;
    std::optional<Int> claimed_bound;

    const Rational& input(std::string_view name) const;  // DataError if absent
};

Scenario scenario_for(ScenarioId id);

// One replayed derivation step: operation, exact inputs, exact output, and a
// human-checkable justification for why the step is sound.
struct CaseStep {
    std::string op;
    std::string inputs;
    std::string output;
    std::string anchor;
};

struct CaseReport {
    ScenarioId scenario_id{};
    std::vector<std::string> assumptions;  // copied from the scenario
    std::vector<CaseStep> steps;
    Int derived_bound;
    std::optional<Int> claimed_bound;
    bool consistent = false;  // derived <= claimed, or no claim recorded

    // Certificate text: one "op | inputs | output | anchor" line per step,
    // then "BOUND <n>" (plus scenario/assumption/claim framing lines).
    std::string str() const;
};

// DataError unless: at least one step, every step field non-empty, the final
// step's output equals the derived bound, and derived_bound >= 1.
void validate_report(const CaseReport& report);

// Replays the scenario's derivation chain against the numerical data,
// checking the premises the case needs (P_18, P_24, P_36 as appropriate) and
// recording every arithmetic step. DataError on violated premises.
CaseReport run_scenario(const Scenario& scenario, const ThreefoldData& X);

// Certified lower bound for L^2 on the generic fibre, from the descending
// contradiction scan at the Cartier denominator plus integrality refinement.
// The chen-delta18 profile gives 1/195; the bound 1/cartier_index is always
// available because r * L^2 is a positive integer.
Rational lemma_es_bound(const ThreefoldData& X);

// Birationality level using only the generic restriction coefficient
// beta_tilde = 1/19 and the lemma_es_bound value. chen-delta18 profile: 59.
Int weak_corollary_bound(const ThreefoldData& X);

// Under the same-pencil premises (nu0 = 1/12, hence beta_tilde = 1/13),
// whether a generic fibre with canonical degree K^2 = k2_f0 is numerically
// admissible: (1/12) * k2_f0 * (1/13)^2 <= K^3. DataError unless k2_f0 >= 1.
bool surface_invariant_constraint(const ThreefoldData& X, const Int& k2_f0);

struct AggregateBound {
    Int bound;
    std::vector<CaseReport> reports;  // the six cases, kAllScenarios order
};

// Max of the six scenario bounds. DataError unless delta_index(X) == 18 —
// the case split only covers that situation.
AggregateBound theorem_57(const ThreefoldData& X);

struct R3Bound {
    Int bound;
    Int delta18_bound;                // the aggregate bound for delta = 18 data
    std::vector<std::string> cited;   // external inputs used without reproof
};

// Global bound for the third-plurigenus family: max of the delta = 18
// aggregate and the cited bound 56 covering delta <= 15 (delta = 16, 17
// cannot occur, also cited).
R3Bound corollary_r3(const ThreefoldData& X);

}  // namespace tfold
