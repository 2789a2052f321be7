#include "polyurn/urn.hpp"

#include <algorithm>
#include <string>

#include "polyurn/errors.hpp"
#include "polyurn/spectral.hpp"

namespace polyurn {

namespace {

std::string type_name(const UrnSpec& spec, std::size_t i) {
    if (i < spec.labels.size() && !spec.labels[i].empty())
        return "type " + std::to_string(i + 1) + " (" + spec.labels[i] + ")";
    return "type " + std::to_string(i + 1);
}

}  // namespace

void UrnSpec::validate() const {
    if (q == 0) throw SpecError("urn has no types");
    if (activities.size() != q)
        throw SpecError("activities has " + std::to_string(activities.size()) +
                        " entries for " + std::to_string(q) + " types");
    if (!labels.empty() && labels.size() != q)
        throw SpecError("labels must be empty or have one entry per type");
    bool any_positive = false;
    for (std::size_t i = 0; i < q; ++i) {
        if (activities[i].sign() < 0)
            throw SpecError("negative activity for type " + std::to_string(i + 1));
        any_positive = any_positive || activities[i].sign() > 0;
    }
    if (!any_positive) throw SpecError("all activities are zero");

    std::vector<bool> covered(q, false);
    for (const auto& rule : rules) {
        if (rule.drawn >= q)
            throw SpecError("rule for out-of-range type " + std::to_string(rule.drawn + 1));
        if (covered[rule.drawn])
            throw SpecError("duplicate rule for type " + std::to_string(rule.drawn + 1));
        covered[rule.drawn] = true;
        if (activities[rule.drawn].is_zero())
            throw SpecError("zero-activity type " + std::to_string(rule.drawn + 1) +
                            " must not carry a rule");
        if (rule.outcomes.empty())
            throw SpecError("empty replacement law for type " + std::to_string(rule.drawn + 1));
        Rational total;
        for (const auto& outcome : rule.outcomes) {
            if (outcome.prob.sign() <= 0 || outcome.prob > Rational(1))
                throw SpecError("outcome probability outside (0,1] for type " +
                                std::to_string(rule.drawn + 1));
            if (outcome.delta.size() != q)
                throw SpecError("outcome delta has wrong length for type " +
                                std::to_string(rule.drawn + 1));
            total += outcome.prob;
        }
        if (total != Rational(1))
            throw SpecError("outcome probabilities for type " + std::to_string(rule.drawn + 1) +
                            " sum to " + total.str() + ", not 1");
    }
    for (std::size_t i = 0; i < q; ++i)
        if (activities[i].sign() > 0 && !covered[i])
            throw SpecError("no replacement rule for positive-activity type " +
                            std::to_string(i + 1));

    if (step_increment) {
        if (step_increment->sign() <= 0)
            throw SpecError("step increment must be positive");
        for (std::size_t i = 0; i < q; ++i)
            if (activities[i].sign() > 0 && draw_weight_change(i) != *step_increment)
                throw SpecError("declared step increment " + step_increment->str() +
                                " does not match a.E(xi) for type " + std::to_string(i + 1));
    }
}

const ReplacementRule* UrnSpec::rule_for(std::size_t type) const {
    for (const auto& rule : rules)
        if (rule.drawn == type) return &rule;
    return nullptr;
}

Rational UrnSpec::draw_weight_change(std::size_t type) const {
    const ReplacementRule* rule = rule_for(type);
    if (rule == nullptr) return Rational(0);
    Rational total;
    for (const auto& outcome : rule->outcomes) {
        Rational weight;
        for (std::size_t j = 0; j < q; ++j)
            if (outcome.delta[j] != 0) weight += activities[j] * Rational(outcome.delta[j]);
        total += outcome.prob * weight;
    }
    return total;
}

std::optional<Rational> UrnSpec::derive_step_increment() const {
    std::optional<Rational> s;
    for (std::size_t i = 0; i < q; ++i) {
        if (activities[i].is_zero()) continue;
        Rational w = draw_weight_change(i);
        if (!s)
            s = w;
        else if (*s != w)
            return std::nullopt;
    }
    return s;
}

RatVector mean_replacement(const UrnSpec& spec, std::size_t type) {
    RatVector mean(spec.q);
    const ReplacementRule* rule = spec.rule_for(type);
    if (rule == nullptr) return mean;
    for (const auto& outcome : rule->outcomes)
        for (std::size_t j = 0; j < spec.q; ++j)
            if (outcome.delta[j] != 0) mean[j] += outcome.prob * Rational(outcome.delta[j]);
    return mean;
}

RatMatrix build_matrix_A(const UrnSpec& spec) {
    spec.validate();
    RatMatrix a(spec.q, spec.q);
    for (std::size_t j = 0; j < spec.q; ++j) {
        if (spec.activities[j].is_zero()) continue;
        RatVector mean = mean_replacement(spec, j);
        for (std::size_t i = 0; i < spec.q; ++i)
            if (!mean[i].is_zero()) a(i, j) = spec.activities[j] * mean[i];
    }
    return a;
}

SecondMoments compute_B(const UrnSpec& spec, const RatVector& v1) {
    if (v1.size() != spec.q) throw DimensionError("compute_B: v1 has wrong length");
    SecondMoments out;
    out.per_type.reserve(spec.q);
    out.weighted = RatMatrix(spec.q, spec.q);
    for (std::size_t i = 0; i < spec.q; ++i) {
        RatMatrix bi(spec.q, spec.q);
        const ReplacementRule* rule = spec.rule_for(i);
        const Rational w = spec.activities[i] * v1[i];
        if (rule != nullptr) {
            // The deltas are sparse; visit only their nonzero support.
            for (const auto& outcome : rule->outcomes) {
                std::vector<std::size_t> support;
                for (std::size_t j = 0; j < spec.q; ++j)
                    if (outcome.delta[j] != 0) support.push_back(j);
                for (std::size_t r : support)
                    for (std::size_t c : support) {
                        Rational term = outcome.prob * Rational(outcome.delta[r]) *
                                        Rational(outcome.delta[c]);
                        bi(r, c) += term;
                        if (!w.is_zero()) out.weighted(r, c) += w * term;
                    }
            }
        }
        out.per_type.push_back(std::move(bi));
    }
    return out;
}

namespace {

// Whole-group removal sizes: g_i = max(1, largest removal of type i by its
// own rule).
std::vector<long> removal_groups(const UrnSpec& spec) {
    std::vector<long> g(spec.q, 1);
    for (const auto& rule : spec.rules)
        for (const auto& outcome : rule.outcomes)
            if (outcome.delta[rule.drawn] < -g[rule.drawn]) g[rule.drawn] = -outcome.delta[rule.drawn];
    return g;
}

void check_sign_structure(const UrnSpec& spec, const std::vector<long>* start,
                          AssumptionReport& report) {
    bool clean = true;
    const std::vector<long> groups = removal_groups(spec);
    for (const auto& rule : spec.rules) {
        for (std::size_t o = 0; o < rule.outcomes.size(); ++o) {
            const auto& delta = rule.outcomes[o].delta;
            for (std::size_t j = 0; j < spec.q; ++j) {
                if (j == rule.drawn) continue;
                if (delta[j] < 0) {
                    report.failures.push_back(
                        "sign structure: drawing " + type_name(spec, rule.drawn) + " removes " +
                        std::to_string(-delta[j]) + " ball(s) of non-drawn " + type_name(spec, j) +
                        " (outcome " + std::to_string(o + 1) + ")");
                    clean = false;
                }
            }
        }
    }
    // Types removed in groups: every transition (and the start state) must
    // respect the group size, so counts stay nonnegative multiples of it.
    bool groups_used = false;
    for (std::size_t i = 0; i < spec.q; ++i) {
        if (groups[i] <= 1) continue;
        groups_used = true;
        for (const auto& rule : spec.rules)
            for (std::size_t o = 0; o < rule.outcomes.size(); ++o)
                if (rule.outcomes[o].delta[i] % groups[i] != 0) {
                    report.failures.push_back(
                        "group removal: " + type_name(spec, i) + " is removed " +
                        std::to_string(groups[i]) + " at a time, but drawing " +
                        type_name(spec, rule.drawn) + " changes it by " +
                        std::to_string(rule.outcomes[o].delta[i]) + " (outcome " +
                        std::to_string(o + 1) + ")");
                    clean = false;
                }
        if (start != nullptr && (*start)[i] % groups[i] != 0) {
            report.failures.push_back("group removal: start count " +
                                      std::to_string((*start)[i]) + " of " + type_name(spec, i) +
                                      " is not a multiple of its group size " +
                                      std::to_string(groups[i]));
            clean = false;
        }
    }
    if (start != nullptr)
        for (std::size_t i = 0; i < spec.q; ++i)
            if ((*start)[i] < 0) {
                report.failures.push_back("negative start count for " + type_name(spec, i));
                clean = false;
            }
    if (clean) {
        std::string note = "sign structure: non-drawn types are never removed";
        if (groups_used) {
            note += "; group removals are consistent";
            if (start == nullptr) note += " (start state not supplied, divisibility assumed)";
        }
        report.passed.push_back(note);
    }
}

void check_reachability(const UrnSpec& spec, AssumptionReport& report) {
    // Edge i -> j when drawing i can add a ball of type j.
    std::vector<std::vector<bool>> reach(spec.q, std::vector<bool>(spec.q, false));
    for (std::size_t i = 0; i < spec.q; ++i) reach[i][i] = true;
    for (const auto& rule : spec.rules)
        for (const auto& outcome : rule.outcomes)
            for (std::size_t j = 0; j < spec.q; ++j)
                if (outcome.delta[j] > 0) reach[rule.drawn][j] = true;
    // Transitive closure (q is small; cubic is fine).
    for (std::size_t k = 0; k < spec.q; ++k)
        for (std::size_t i = 0; i < spec.q; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < spec.q; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    bool ok = true;
    for (std::size_t i = 0; i < spec.q && ok; ++i) {
        if (spec.activities[i].is_zero()) continue;
        for (std::size_t j = 0; j < spec.q; ++j) {
            if (spec.activities[j].is_zero() || reach[i][j]) continue;
            report.failures.push_back("reachability: " + type_name(spec, i) + " can never produce " +
                                      type_name(spec, j));
            ok = false;
            break;
        }
    }
    if (ok)
        report.passed.push_back(
            "reachability: every positive-activity type can generate every other");
}

}  // namespace

AssumptionReport check_assumptions(const UrnSpec& spec, const std::vector<long>* start_state) {
    spec.validate();
    if (start_state != nullptr && start_state->size() != spec.q)
        throw DimensionError("check_assumptions: start state has wrong length");
    AssumptionReport report;

    check_sign_structure(spec, start_state, report);
    report.passed.push_back("replacement laws have finite support and finite second moments");
    check_reachability(spec, report);

    // Balance: a . E(xi_i) constant and positive across drawn types.
    std::optional<Rational> s = spec.derive_step_increment();
    if (!s) {
        std::string witness = "balance: a.E(xi) differs across types:";
        for (std::size_t i = 0; i < spec.q; ++i)
            if (spec.activities[i].sign() > 0)
                witness += " " + spec.draw_weight_change(i).str();
        report.failures.push_back(witness);
    } else if (s->sign() <= 0) {
        report.failures.push_back("balance: a.E(xi) = " + s->str() + " is not positive");
    } else {
        report.passed.push_back("balance: every draw adds activity weight exactly " + s->str());
        report.passed.push_back(
            "survival: activity grows by a positive constant per draw, so drawable balls "
            "always exist");
        if (spec.step_increment && *spec.step_increment != *s)
            report.failures.push_back("declared step increment " + spec.step_increment->str() +
                                      " contradicts the derived value " + s->str());
    }

    // Largest eigenvalue: real, positive, simple.
    try {
        SpectralOptions opts;
        opts.want_dual_bases = false;
        SpectralData sd = spectral(spec, opts);
        report.passed.push_back("largest eigenvalue " + sd.lambda1.str() +
                                " is real, positive and simple");
    } catch (const Error& e) {
        report.failures.push_back(std::string("largest eigenvalue: ") + e.what());
    }
    return report;
}

}  // namespace polyurn
