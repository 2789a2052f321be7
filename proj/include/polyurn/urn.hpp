#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyurn/matrix.hpp"

namespace polyurn {

// One support point of the replacement law: with probability `prob`, drawing
// the rule's type adds `delta_j` balls of each type j (negative entries
// remove balls).
struct ReplacementOutcome {
    Rational prob;
    std::vector<long> delta;
};

// The full replacement law for one drawn type.
struct ReplacementRule {
    std::size_t drawn = 0;
    std::vector<ReplacementOutcome> outcomes;
};

// A generalized Polya urn: q ball types with nonnegative activities, one
// replacement rule per type of positive activity (zero-activity types are
// never drawn and carry no rule).
struct UrnSpec {
    std::size_t q = 0;
    RatVector activities;
    std::vector<ReplacementRule> rules;
    std::vector<std::string> labels;  // empty, or one display name per type

    // The constant s = a . E(xi_i), when the urn is balanced so the total
    // activity rises by exactly s on every draw.
    std::optional<Rational> step_increment;

    // Structural validation (shapes, probability sums, rule coverage,
    // declared step increment).  Throws SpecError.  Sign conditions on the
    // deltas are semantic assumptions handled by check_assumptions.
    void validate() const;

    // The rule for a type, or nullptr for zero-activity types.
    const ReplacementRule* rule_for(std::size_t type) const;

    // a . E(xi_i) for one type (zero for zero-activity types).
    Rational draw_weight_change(std::size_t type) const;

    // Computes the balanced step increment if a . E(xi_i) is constant across
    // all positive-activity types; nullopt otherwise.
    std::optional<Rational> derive_step_increment() const;
};

// Mean replacement vector E(xi_i) of one type.
RatVector mean_replacement(const UrnSpec& spec, std::size_t type);

// The drift matrix: column j equals a_j * E(xi_j); zero-activity columns are
// zero.
RatMatrix build_matrix_A(const UrnSpec& spec);

// Second moments of the replacement laws: per_type[i] = E(xi_i xi_i') and
// the composite B = sum_i v1_i a_i per_type[i].
struct SecondMoments {
    std::vector<RatMatrix> per_type;
    RatMatrix weighted;
};
SecondMoments compute_B(const UrnSpec& spec, const RatVector& v1);

// Outcome of the model-assumption audit.  Every check lands either in
// `passed` (with a short note) or in `failures` (with a witness).
struct AssumptionReport {
    std::vector<std::string> passed;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Audits the urn against the limit-theorem hypotheses:
//  - sign structure of the deltas: balls of non-drawn types are never
//    removed; the drawn type loses at most one ball, or — the whole-group
//    removal pattern — always a multiple of a fixed group size g_i (then a
//    start state divisible by g_i keeps every count nonnegative);
//  - finite support of every replacement law (automatic here);
//  - a real, positive, simple largest eigenvalue;
//  - every positive-activity type can generate every other one (reachability
//    closure of the "drawing i can add j" edges);
//  - balance: a . E(xi_i) equals a constant s > 0.
// `start_state` (ball counts at time zero), when given, is included in the
// group-divisibility and nonnegativity checks.
AssumptionReport check_assumptions(const UrnSpec& spec,
                                   const std::vector<long>* start_state = nullptr);

}  // namespace polyurn
