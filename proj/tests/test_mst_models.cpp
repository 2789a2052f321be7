#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "polyurn/errors.hpp"
#include "polyurn/exact_linalg.hpp"
#include "polyurn/law.hpp"
#include "polyurn/models.hpp"
#include "polyurn/reference_data.hpp"
#include "polyurn/spectral.hpp"
#include "test_util.hpp"

using namespace polyurn;
using namespace polyurn::testutil;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// a . delta for one outcome.
Rational key_weight(const UrnSpec& s, const ReplacementOutcome& oc) {
    Rational c(0);
    for (std::size_t j = 0; j < s.q; ++j)
        if (oc.delta[j] != 0) c += s.activities[j] * Rational(oc.delta[j]);
    return c;
}

}  // namespace

TEST_CASE("fringe configuration enumeration") {
    CHECK_THROWS_AS(enumerate_types(1), DomainError);

    for (std::size_t m = 2; m <= 6; ++m) {
        const auto types = enumerate_types(m);
        CHECK(types.size() == binomial(2 * m, m) - 1);
        for (std::size_t i = 0; i + 1 < types.size(); ++i) CHECK(types[i + 1] < types[i]);
        for (const auto& t : types) {
            long total = 0;
            for (long ki : t.k) {
                CHECK(ki >= 0);
                total += ki;
            }
            CHECK(total <= static_cast<long>(m));
            // the all-external full node is excluded
            CHECK_FALSE((t.k[0] == static_cast<long>(m) && total == static_cast<long>(m)));
        }
    }
    CHECK(enumerate_types(10).size() == binomial(20, 10) - 1);

    const auto two = enumerate_types(2);
    REQUIRE(two.size() == 5);
    CHECK(two[0].k == std::vector<long>{1, 1});
    CHECK(two[1].k == std::vector<long>{1, 0});
    CHECK(two[2].k == std::vector<long>{0, 2});
    CHECK(two[3].k == std::vector<long>{0, 1});
    CHECK(two[4].k == std::vector<long>{0, 0});

    const SmallTreeType sample{{2, 0, 1}};
    CHECK(sample.activity() == 5);
    CHECK(sample.leaf_count() == 1);
    CHECK_FALSE(sample.is_protected());
    CHECK(sample.label() == "(2,0,1)");
    CHECK(SmallTreeType{{2, 0, 0}}.is_protected());
}

TEST_CASE("composition urn reproduces the recorded binary tables after reordering") {
    const ModelBundle b = protected_urn(2);
    REQUIRE(b.spec.q == 5);
    CHECK(b.start_keys == 2);

    const auto perm = reference_permutation(2);
    const RatMatrix a = apply_permutation(build_matrix_A(b.spec), perm);
    CHECK(a == mat_from(5, refdata::kBinaryA));

    const RatVector acts = apply_permutation(b.spec.activities, perm);
    CHECK(acts == vec_from(5, refdata::kBinaryActivities));

    // protected configurations in the published order: exactly the last two
    const RatVector prot = apply_permutation(b.functionals.at("protected"), perm);
    const RatVector want = {Rational(0), Rational(0), Rational(0), Rational(1), Rational(1)};
    CHECK(prot == want);

    // the start configuration is (1,1) with both keys placed
    std::size_t nonzero = 0, start_idx = 0;
    for (std::size_t i = 0; i < 5; ++i)
        if (b.start_state[i] != 0) {
            ++nonzero;
            start_idx = i;
        }
    CHECK(nonzero == 1);
    CHECK(b.types[start_idx].k == std::vector<long>{1, 1});
}

TEST_CASE("composition urn reproduces the recorded ternary tables after reordering") {
    const ModelBundle b = protected_urn(3);
    REQUIRE(b.spec.q == 19);
    const auto perm = reference_permutation(3);

    CHECK(apply_permutation(build_matrix_A(b.spec), perm) == mat_from(19, refdata::kTernaryA));
    CHECK(apply_permutation(b.spec.activities, perm) == vec_from(19, refdata::kTernaryActivities));
    CHECK(apply_permutation(b.functionals.at("leaves"), perm) ==
          vec_from(19, refdata::kTernaryLeafCounts));
}

TEST_CASE("every key insertion adds exactly one key") {
    for (std::size_t m = 2; m <= 5; ++m) {
        const ModelBundle b = protected_urn(m);
        for (const auto& rule : b.spec.rules)
            for (const auto& oc : rule.outcomes) CHECK(key_weight(b.spec, oc) == Rational(1));
    }
    for (std::size_t m = 2; m <= 6; ++m) {
        const ModelBundle b = node_urn(m);
        for (const auto& rule : b.spec.rules)
            for (const auto& oc : rule.outcomes) CHECK(key_weight(b.spec, oc) == Rational(1));
    }
    for (std::size_t m = 3; m <= 6; ++m) {
        const ModelBundle b = leaves_gap_urn(m);
        for (const auto& rule : b.spec.rules)
            for (const auto& oc : rule.outcomes) CHECK(key_weight(b.spec, oc) == Rational(1));
    }
    for (std::size_t m = 2; m <= 6; ++m) {
        const ModelBundle b = one_protected_urn(m);
        for (const auto& rule : b.spec.rules)
            for (const auto& oc : rule.outcomes) CHECK(key_weight(b.spec, oc) == Rational(1));
    }
}

TEST_CASE("assumption audit passes every model with its start state") {
    for (std::size_t m = 2; m <= 4; ++m) {
        const ModelBundle b = protected_urn(m);
        CHECK(check_assumptions(b.spec, &b.start_state).ok());
    }
    for (std::size_t m = 2; m <= 6; ++m) {
        const ModelBundle b = node_urn(m);
        const AssumptionReport rep = check_assumptions(b.spec, &b.start_state);
        INFO("gap urn m = " << m);
        CHECK(rep.ok());
    }
    for (std::size_t m = 3; m <= 6; ++m) {
        const ModelBundle b = leaves_gap_urn(m);
        CHECK(check_assumptions(b.spec, &b.start_state).ok());
    }
    for (std::size_t m = 2; m <= 6; ++m) {
        const ModelBundle b = one_protected_urn(m);
        CHECK(check_assumptions(b.spec, &b.start_state).ok());
    }
}

TEST_CASE("gap urn matrices and polynomials") {
    CHECK(build_matrix_A(node_urn(2).spec) == mat_from_longs(1, 1, {1}));
    CHECK(build_matrix_A(node_urn(3).spec) == mat_from_longs(2, 2, {-1, 3, 2, -2}));
    CHECK(build_matrix_A(leaves_gap_urn(3).spec) == mat_from(3, refdata::kLeafGapA3));

    for (std::size_t m = 2; m <= 8; ++m)
        CHECK(char_poly(build_matrix_A(node_urn(m).spec)) == node_char_poly(m));

    // The leaf-splitting urn only adds a root at -m.
    for (std::size_t m = 3; m <= 8; ++m) {
        const Poly lhs = char_poly(build_matrix_A(leaves_gap_urn(m).spec));
        const Poly ext = Poly({Rational(static_cast<long>(m)), Rational(1)}) * node_char_poly(m);
        CHECK(lhs == ext);
    }
}

TEST_CASE("gap counts embed into the composition urn") {
    for (std::size_t m = 2; m <= 4; ++m) {
        const ModelBundle b = protected_urn(m);
        const RatMatrix t = node_gap_projection(m, b.types);
        const RatMatrix lhs = t * build_matrix_A(b.spec);
        const RatMatrix rhs = build_matrix_A(node_urn(m).spec) * t;
        INFO("m = " << m);
        CHECK(lhs == rhs);
    }

    // For m = 2 every gap completes a 1-key node, so the single gap count is
    // the total activity.
    const ModelBundle two = protected_urn(2);
    const RatMatrix t2 = node_gap_projection(2, two.types);
    for (std::size_t c = 0; c < 5; ++c) CHECK(t2(0, c) == two.spec.activities[c]);

    for (std::size_t m = 2; m <= 4; ++m) {
        const RootLinkReport rep = check_root_embedding(m);
        INFO("m = " << m << ": " << rep.detail);
        CHECK(rep.intertwines);
        CHECK(rep.roots_contained);
        CHECK(rep.ok());
        CHECK(rep.detail.empty());
    }
    CHECK_THROWS_AS(check_root_embedding(7), CapError);
}

TEST_CASE("second-eigenvalue condition holds up to m = 26 and fails beyond") {
    const SpectralCondition vac = spectral_condition(2);
    CHECK(vac.holds);
    CHECK_FALSE(vac.lambda2_re.has_value());

    const SpectralCondition three = spectral_condition(3);
    REQUIRE(three.lambda2_re.has_value());
    CHECK(three.holds);
    CHECK(std::abs(*three.lambda2_re - Real(-4)) < 1e-9L);

    const SpectralCondition last = spectral_condition(26);
    REQUIRE(last.lambda2_re.has_value());
    CHECK(last.holds);
    CHECK(*last.lambda2_re < Real(0.5L));

    const SpectralCondition first_bad = spectral_condition(27);
    REQUIRE(first_bad.lambda2_re.has_value());
    CHECK_FALSE(first_bad.holds);
    CHECK(*first_bad.lambda2_re > Real(0.5L));
}

TEST_CASE("closed forms for the leaf and once-protected rates") {
    CHECK_THROWS_AS(closed_forms(2), DomainError);

    const ClosedForms three = closed_forms(3);
    CHECK(three.harmonic == Rational(11, 6));
    CHECK(three.mu_leaves == Rational(3, 10));
    CHECK(three.mu_one_protected == Rational(3, 10));

    const ClosedForms four = closed_forms(4);
    CHECK(four.harmonic == Rational(25, 12));
    CHECK(four.mu_leaves == Rational(18, 65));
    CHECK(four.mu_one_protected == Rational(12, 65));
}

TEST_CASE("binary protected-node law through the model pipeline") {
    const ModelBundle b = protected_urn(2);
    SpectralOptions opts;
    opts.want_dual_bases = true;
    const SpectralData sd = spectral(b.spec, opts);
    const AsymptoticLaw law = asymptotics_integral(b.spec, sd);

    const auto perm = reference_permutation(2);
    CHECK(apply_permutation(law.mu, perm) == vec_from(5, refdata::kBinaryV1));
    CHECK(apply_permutation(law.sigma, perm) == mat_from(5, refdata::kBinarySigma));

    const auto [mean, var] = functional_law(law, b.functionals.at("protected"));
    CHECK(mean == Rational(11, 30));
    CHECK(var == Rational(29, 225));

    // Dual-basis route agrees exactly here (five distinct rational roots).
    const AsymptoticLaw dual = asymptotics_dual_basis(b.spec, sd);
    CHECK(dual.sigma == law.sigma);
}

TEST_CASE("ternary protected-node law through the model pipeline") {
    const ModelBundle b = protected_urn(3);
    const SpectralData sd = spectral(b.spec);
    CHECK(sd.lambda1 == Rational(1));
    CHECK(sd.u1 == b.spec.activities);

    const auto perm = reference_permutation(3);
    CHECK(apply_permutation(sd.v1, perm) == vec_from(19, refdata::kTernaryV1));

    // This drift matrix is defective, so the dual-basis route must refuse
    // and the integral route carries the law.
    REQUIRE(sd.diagonalizable.has_value());
    CHECK_FALSE(*sd.diagonalizable);
    CHECK_THROWS_AS(asymptotics_dual_basis(b.spec, sd), MethodError);

    const RatMatrix proj = RatMatrix::identity(19) - outer(sd.v1, sd.u1);
    CHECK(apply_permutation(proj, perm) == mat_from(19, refdata::kTernaryPI));

    const SecondMoments sm = compute_B(b.spec, sd.v1);
    CHECK(apply_permutation(sm.weighted, perm) == mat_from(19, refdata::kTernaryB));

    const AsymptoticLaw law = asymptotics_integral(b.spec, sd);
    const Rational scale = Rational::parse(refdata::kTernarySigmaScale);
    const RatMatrix sigma_ref = scale * mat_from(19, refdata::kTernarySigmaScaled);
    CHECK(apply_permutation(law.sigma, perm) == sigma_ref);

    // The block on the three protected coordinates, in published order.
    const RatMatrix sigma_paper = apply_permutation(law.sigma, perm);
    const RatMatrix block_ref = mat_from(3, refdata::kTernarySigmaP);
    const std::size_t prot_rows[3] = {16, 17, 18};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s)
            CHECK(sigma_paper(prot_rows[r], prot_rows[s]) == block_ref(r, s));

    const auto [mean, var] = functional_law(law, b.functionals.at("protected"));
    CHECK(mean == Rational(57, 700));
    CHECK(var == Rational(1692302314867L, 43692253605000L));

    const auto [lmean, lvar] = functional_law(law, b.functionals.at("leaves"));
    CHECK(lmean == Rational(3, 10));
    CHECK(lvar == Rational(89, 2100));
}

TEST_CASE("ternary leaf law from the splitting gap urn") {
    const ModelBundle b = leaves_gap_urn(3);
    SpectralOptions opts;
    opts.want_dual_bases = true;
    const SpectralData sd = spectral(b.spec, opts);
    CHECK(sd.v1 == vec_from(3, refdata::kLeafGapV1));

    const AsymptoticLaw law = asymptotics_integral(b.spec, sd);
    CHECK(law.sigma == mat_from(3, refdata::kLeafGapSigma3));

    const auto [mean, var] = functional_law(law, b.functionals.at("leaves"));
    CHECK(mean == Rational(3, 10));
    CHECK(var == Rational(89, 2100));

    // Three distinct rational eigenvalues: the dual-basis route agrees
    // exactly.
    const AsymptoticLaw dual = asymptotics_dual_basis(b.spec, sd);
    CHECK(dual.sigma == law.sigma);
    CHECK(dual.mu == law.mu);
}

TEST_CASE("once-protected law for m = 2 and 3") {
    {
        const ModelBundle b = one_protected_urn(2);
        const SpectralData sd = spectral(b.spec);
        const AsymptoticLaw law = asymptotics_integral(b.spec, sd);
        CHECK(law.sigma == mat_from(3, refdata::kOneProtSigma2));
        const auto [mean, var] = functional_law(law, b.functionals.at("one_protected"));
        CHECK(mean == Rational(2, 3));
        CHECK(var == Rational(2, 45));
    }
    {
        const ModelBundle b = one_protected_urn(3);
        SpectralOptions opts;
        opts.want_dual_bases = true;
        const SpectralData sd = spectral(b.spec, opts);
        const AsymptoticLaw law = asymptotics_integral(b.spec, sd);
        CHECK(law.sigma == mat_from(4, refdata::kOneProtSigma3));

        const auto [qmean, qvar] = functional_law(law, b.functionals.at("one_protected"));
        CHECK(qmean == Rational(3, 10));
        CHECK(qvar == Rational(9, 350));

        // Same leaf law as the splitting gap urn.
        const auto [lmean, lvar] = functional_law(law, b.functionals.at("leaves"));
        CHECK(lmean == Rational(3, 10));
        CHECK(lvar == Rational(89, 2100));

        const auto [imean, ivar] = functional_law(law, b.functionals.at("internal"));
        CHECK(imean == Rational(3, 5));
        CHECK(ivar == Rational(2, 75));

        // Cross-covariance of leaves and once-protected counts.
        const RatVector sq = law.sigma * b.functionals.at("one_protected");
        CHECK(dot(b.functionals.at("leaves"), sq) == Rational(-29, 1400));
    }
}

TEST_CASE("model lookup, aliases and caps") {
    CHECK(make_model("protected", 2).model_name == "protected");
    CHECK(make_model("two_protected", 2).model_name == "protected");
    CHECK(make_model("TWO-PROTECTED", 2).model_name == "protected");
    CHECK(make_model("nodes", 4).spec.q == 3);
    CHECK(make_model("leaves", 3).spec.q == 3);
    CHECK(make_model("one_protected", 3).spec.q == 4);
    CHECK(make_model("one-protected", 3).spec.q == 4);
    CHECK_THROWS_AS(make_model("fringe", 3), SpecError);

    CHECK_THROWS_AS(leaves_gap_urn(2), DomainError);
    CHECK_THROWS_AS(node_urn(1), DomainError);
    CHECK_THROWS_AS(one_protected_urn(1), DomainError);
    CHECK_THROWS_AS(protected_urn(9), CapError);
    CHECK_THROWS_AS(make_model("protected", 9), CapError);
}
