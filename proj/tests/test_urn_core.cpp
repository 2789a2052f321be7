#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "polyurn/errors.hpp"
#include "polyurn/law.hpp"
#include "polyurn/reference_data.hpp"
#include "polyurn/spectral.hpp"
#include "polyurn/urn.hpp"
#include "test_util.hpp"

using namespace polyurn;
using namespace polyurn::testutil;

namespace {

// The five-type binary fringe urn, written out by hand in the published
// type order (0,2), (1,1), (0,1), (1,0), (0,0).  Everything the library
// computes for it is checked against independently recorded tables.
UrnSpec binary_fringe_urn() {
    UrnSpec s;
    s.q = 5;
    s.activities = {Rational(4), Rational(3), Rational(2), Rational(1), Rational(0)};
    s.labels = {"(0,2)", "(1,1)", "(0,1)", "(1,0)", "(0,0)"};
    s.rules = {
        {0, {{Rational(1), {-1, 1, 1, 0, 0}}}},
        {1, {{Rational(1, 3), {1, -1, 0, 0, 0}}, {Rational(2, 3), {0, 0, 0, 1, 0}}}},
        {2, {{Rational(1), {0, 1, -1, 0, 1}}}},
        {3, {{Rational(1), {0, 0, 1, -1, 0}}}},
    };
    s.step_increment = Rational(1);
    return s;
}

bool mentions(const std::vector<std::string>& notes, const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("structural validation rejects malformed urns") {
    const UrnSpec good = binary_fringe_urn();
    CHECK_NOTHROW(good.validate());

    UrnSpec s = good;
    s.rules[1].outcomes[0].prob = Rational(1, 2);  // probabilities no longer sum to one
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.rules.pop_back();  // positive-activity type without a rule
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.rules.push_back({4, {{Rational(1), {0, 0, 0, 0, 1}}}});  // inert type with a rule
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.rules.push_back({3, {{Rational(1), {0, 0, 1, -1, 0}}}});  // duplicate rule
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.rules[0].outcomes[0].delta = {-1, 1, 1};  // wrong delta length
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.activities[2] = Rational(-2);
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.rules[1].outcomes[0].prob = Rational(0);  // support points need positive mass
    CHECK_THROWS_AS(s.validate(), SpecError);

    s = good;
    s.step_increment = Rational(2);  // declared increment contradicts the rules
    CHECK_THROWS_AS(s.validate(), SpecError);
}

TEST_CASE("drift matrix and mean replacements match the recorded binary tables") {
    const UrnSpec s = binary_fringe_urn();
    CHECK(build_matrix_A(s) == mat_from(5, refdata::kBinaryA));

    const RatVector xi1 = mean_replacement(s, 1);
    const RatVector want = {Rational(1, 3), Rational(-1, 3), Rational(0), Rational(2, 3),
                            Rational(0)};
    CHECK(xi1 == want);

    for (std::size_t t = 0; t + 1 < s.q; ++t) CHECK(s.draw_weight_change(t) == Rational(1));
    REQUIRE(s.derive_step_increment().has_value());
    CHECK(*s.derive_step_increment() == Rational(1));

    // One key enters per draw, so total activity grows by s = 1: a . delta = 1
    // holds outcome by outcome, not just in expectation.
    for (const auto& rule : s.rules)
        for (const auto& oc : rule.outcomes) {
            Rational change(0);
            for (std::size_t j = 0; j < s.q; ++j) change += s.activities[j] * Rational(oc.delta[j]);
            CHECK(change == Rational(1));
        }
}

TEST_CASE("second moments match the recorded binary tables") {
    const UrnSpec s = binary_fringe_urn();
    const RatVector v1 = vec_from(5, refdata::kBinaryV1);
    const SecondMoments sm = compute_B(s, v1);
    REQUIRE(sm.per_type.size() == 5);
    CHECK(sm.per_type[1] == mat_from(5, refdata::kBinaryB2));
    CHECK(sm.weighted == mat_from(5, refdata::kBinaryB));
    // E(xi xi') of an inert type is all zero.
    CHECK(sm.per_type[4].is_zero());
}

TEST_CASE("assumption audit accepts the binary urn and reports the step increment") {
    const UrnSpec s = binary_fringe_urn();
    const std::vector<long> start = {0, 1, 0, 0, 0};
    const AssumptionReport rep = check_assumptions(s, &start);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
    CHECK(mentions(rep.passed, "balance"));
    CHECK(mentions(rep.passed, "largest eigenvalue"));
}

TEST_CASE("assumption audit flags structural violations with witnesses") {
    SUBCASE("a rule removing balls of a non-drawn type") {
        UrnSpec s;
        s.q = 2;
        s.activities = {Rational(1), Rational(1)};
        s.rules = {
            {0, {{Rational(1), {1, 0}}}},
            {1, {{Rational(1), {-1, 2}}}},  // drawing type 2 removes a type-1 ball
        };
        s.validate();
        const AssumptionReport rep = check_assumptions(s);
        CHECK_FALSE(rep.ok());
        CHECK(mentions(rep.failures, "removes"));
    }

    SUBCASE("whole-group removals pass exactly when counts stay divisible") {
        UrnSpec s;
        s.q = 2;
        s.activities = {Rational(1), Rational(1)};
        s.rules = {
            {0, {{Rational(1), {-2, 3}}}},
            {1, {{Rational(1), {4, -3}}}},
        };
        s.validate();
        const std::vector<long> good_start = {2, 3};
        CHECK(check_assumptions(s, &good_start).ok());

        const std::vector<long> bad_start = {1, 3};  // type-1 count not a multiple of 2
        const AssumptionReport rep = check_assumptions(s, &bad_start);
        CHECK_FALSE(rep.ok());
        CHECK(mentions(rep.failures, "start"));
    }

    SUBCASE("an unbalanced urn") {
        UrnSpec s;
        s.q = 2;
        s.activities = {Rational(1), Rational(1)};
        s.rules = {
            {0, {{Rational(1), {2, 0}}}},
            {1, {{Rational(1), {0, 1}}}},
        };
        s.validate();
        const AssumptionReport rep = check_assumptions(s);
        CHECK_FALSE(rep.ok());
        CHECK(mentions(rep.failures, "balance"));
    }

    SUBCASE("types that cannot reach each other") {
        UrnSpec s;
        s.q = 2;
        s.activities = {Rational(1), Rational(1)};
        s.rules = {
            {0, {{Rational(1), {1, 0}}}},
            {1, {{Rational(1), {0, 1}}}},
        };
        s.validate();
        const AssumptionReport rep = check_assumptions(s);
        CHECK_FALSE(rep.ok());
        CHECK(mentions(rep.failures, "reach"));
    }
}

TEST_CASE("spectral data of the binary urn is exact") {
    const UrnSpec s = binary_fringe_urn();
    SpectralOptions opts;
    opts.want_dual_bases = true;
    const SpectralData sd = spectral(s, opts);

    CHECK(sd.lambda1 == Rational(1));
    CHECK(sd.u1 == s.activities);
    CHECK(sd.v1 == vec_from(5, refdata::kBinaryV1));
    CHECK(dot(s.activities, sd.v1) == Rational(1));
    CHECK(sd.spectrum_exact);
    REQUIRE(sd.diagonalizable.has_value());
    CHECK(*sd.diagonalizable);

    const std::vector<long> expected = {1, 0, -2, -3, -4};
    REQUIRE(sd.eigenvalues.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(sd.eigenvalues[i].exact.has_value());
        CHECK(*sd.eigenvalues[i].exact == Rational(expected[i]));
    }
    CHECK(classify_regime(sd) == Regime::normal);

    REQUIRE(sd.dual_bases.has_value());
    const DualBases& db = *sd.dual_bases;
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k) {
            const Rational want(j == k ? 1 : 0);
            CHECK(dot(db.u_rows[j], db.v_cols[k]) == want);
        }
    CHECK(db.lambda_of[db.perron_index] == Rational(1));

    // Every dual pair is an exact eigenpair of A.
    const RatMatrix a = build_matrix_A(s);
    for (std::size_t k = 0; k < 5; ++k) {
        const RatVector av = a * db.v_cols[k];
        for (std::size_t i = 0; i < 5; ++i) CHECK(av[i] == db.lambda_of[k] * db.v_cols[k][i]);
    }
}

TEST_CASE("both covariance routes reproduce the recorded binary law") {
    const UrnSpec s = binary_fringe_urn();
    SpectralOptions opts;
    opts.want_dual_bases = true;
    const SpectralData sd = spectral(s, opts);

    const AsymptoticLaw integral = asymptotics_integral(s, sd);
    const AsymptoticLaw dual = asymptotics_dual_basis(s, sd);

    const RatMatrix sigma_ref = mat_from(5, refdata::kBinarySigma);
    CHECK(integral.sigma == sigma_ref);
    CHECK(dual.sigma == sigma_ref);
    CHECK(integral.mu == sd.v1);
    CHECK(dual.mu == sd.v1);
    CHECK(integral.method == LawMethod::lyapunov);
    CHECK(dual.method == LawMethod::dual_basis);

    // The fluctuation law lives in the hyperplane u1 . x = 0.
    const RatVector left = mul_vec_mat(sd.u1, integral.sigma);
    CHECK(is_zero(left));
    const RatVector right = integral.sigma * sd.u1;
    CHECK(is_zero(right));

    // Count of the two inactive types: mean 11/30, variance 29/225.
    const RatVector c = {Rational(0), Rational(0), Rational(0), Rational(1), Rational(1)};
    const auto [mean, var] = functional_law(integral, c);
    CHECK(mean == Rational(11, 30));
    CHECK(var == Rational(29, 225));

    // Numeric routes agree with the exact ones to working precision.
    const NumericLaw ni = asymptotics_integral_numeric(s, sd);
    const NumericLaw nd = asymptotics_dual_basis_numeric(s, sd);
    const MatR exact = to_real(sigma_ref);
    CHECK((ni.sigma - exact).cwiseAbs().maxCoeff() < 1e-12L);
    CHECK((nd.sigma - exact).cwiseAbs().maxCoeff() < 1e-12L);
}

TEST_CASE("regime classification separates normal, boundary and degenerate urns") {
    auto diag_urn = [](long d1, long d2) {
        UrnSpec s;
        s.q = 2;
        s.activities = {Rational(1), Rational(1)};
        s.rules = {
            {0, {{Rational(1), {d1, 0}}}},
            {1, {{Rational(1), {0, d2}}}},
        };
        s.validate();
        return s;
    };

    // lambda2 = 4 > 5/2: no Gaussian limit.
    const SpectralData hot = spectral(diag_urn(5, 4));
    CHECK(hot.lambda1 == Rational(5));
    CHECK(classify_regime(hot) == Regime::not_normal);
    CHECK_THROWS_AS(asymptotics_integral(diag_urn(5, 4), hot), DomainError);

    // lambda2 = 1 = lambda1/2 exactly.
    const SpectralData edge = spectral(diag_urn(2, 1));
    CHECK(classify_regime(edge) == Regime::boundary);

    // lambda2 = -1 < 3/2.
    const SpectralData cool = spectral(diag_urn(3, -1));
    CHECK(classify_regime(cool) == Regime::normal);
}

TEST_CASE("functional reduction validates dimensions") {
    const UrnSpec s = binary_fringe_urn();
    const SpectralData sd = spectral(s);
    const AsymptoticLaw law = asymptotics_integral(s, sd);
    const RatVector wrong = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(functional_law(law, wrong), DimensionError);
}
